//! The free commutative triplicial algebra: set partitions with one
//! distinguished block.
//!
//! A commutative triplicial algebra has two associative products, a
//! commutative one and a right-permutative one, entangled by
//! (x . y) * z = x . (y * z). On marked partitions over disjoint label sets
//! the commutative product merges the marked blocks and the permutative one
//! demotes the right marked block to an ordinary block. Counts per label
//! count: 1, 3, 10, 37, 151 (exponential generating function
//! (e^x - 1) e^(e^x - 1)).

use std::collections::BTreeSet;
use thiserror::Error;

pub type Label = u32;
pub type Block = BTreeSet<Label>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("marked block is empty")]
    EmptyMarked,
    #[error("an ordinary block is empty")]
    EmptyBlock,
    #[error("label {0} appears in two parts")]
    Overlap(Label),
    #[error("ground sets overlap at label {0}")]
    GroundOverlap(Label),
}

/// A set partition with a distinguished (marked) block. Blocks are kept as
/// sorted sets of sorted label sets, so equality is canonical.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MarkedPartition {
    marked: Block,
    blocks: BTreeSet<Block>,
}

impl MarkedPartition {
    pub fn new(marked: Block, blocks: BTreeSet<Block>) -> Result<Self, PartitionError> {
        if marked.is_empty() {
            return Err(PartitionError::EmptyMarked);
        }
        let mut seen = marked.clone();
        for b in &blocks {
            if b.is_empty() {
                return Err(PartitionError::EmptyBlock);
            }
            for &l in b {
                if !seen.insert(l) {
                    return Err(PartitionError::Overlap(l));
                }
            }
        }
        Ok(MarkedPartition { marked, blocks })
    }

    /// Single marked singleton block.
    pub fn atom(label: Label) -> Self {
        MarkedPartition {
            marked: BTreeSet::from([label]),
            blocks: BTreeSet::new(),
        }
    }

    pub fn marked(&self) -> &Block {
        &self.marked
    }

    pub fn blocks(&self) -> &BTreeSet<Block> {
        &self.blocks
    }

    pub fn ground(&self) -> Block {
        let mut g = self.marked.clone();
        for b in &self.blocks {
            g.extend(b.iter().copied());
        }
        g
    }

    /// Degree: number of labels.
    pub fn degree(&self) -> usize {
        self.marked.len() + self.blocks.iter().map(BTreeSet::len).sum::<usize>()
    }

    /// Adds a constant offset to every label, for making grounds disjoint.
    pub fn shift_labels(&self, offset: Label) -> Self {
        let shift = |b: &Block| b.iter().map(|l| l + offset).collect::<Block>();
        MarkedPartition {
            marked: shift(&self.marked),
            blocks: self.blocks.iter().map(|b| shift(b)).collect(),
        }
    }

    fn check_disjoint(&self, other: &Self) -> Result<(), PartitionError> {
        let g = self.ground();
        if let Some(&l) = other.ground().iter().find(|l| g.contains(l)) {
            return Err(PartitionError::GroundOverlap(l));
        }
        Ok(())
    }

    /// The permutative product: keeps the left marked block and demotes the
    /// right one to an ordinary block.
    pub fn perm(&self, other: &Self) -> Result<Self, PartitionError> {
        self.check_disjoint(other)?;
        let mut blocks = self.blocks.clone();
        blocks.insert(other.marked.clone());
        blocks.extend(other.blocks.iter().cloned());
        Ok(MarkedPartition {
            marked: self.marked.clone(),
            blocks,
        })
    }

    /// The commutative product: merges the two marked blocks.
    pub fn comm(&self, other: &Self) -> Result<Self, PartitionError> {
        self.check_disjoint(other)?;
        let mut marked = self.marked.clone();
        marked.extend(other.marked.iter().copied());
        let mut blocks = self.blocks.clone();
        blocks.extend(other.blocks.iter().cloned());
        Ok(MarkedPartition { marked, blocks })
    }

    /// JSON form: `{"marked": [..], "blocks": [[..], ..]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "marked": self.marked.iter().collect::<Vec<_>>(),
            "blocks": self.blocks.iter().map(|b| b.iter().collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

/// All marked partitions of the labels 1..=n.
pub fn enumerate_marked(n: usize) -> Vec<MarkedPartition> {
    let mut out = Vec::new();
    for partition in set_partitions(n) {
        for marked_idx in 0..partition.len() {
            let marked = partition[marked_idx].clone();
            let blocks: BTreeSet<Block> = partition
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != marked_idx)
                .map(|(_, b)| b.clone())
                .collect();
            out.push(MarkedPartition { marked, blocks });
        }
    }
    out.sort();
    out
}

// set partitions of {1..n} as sorted block lists
fn set_partitions(n: usize) -> Vec<Vec<Block>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for smaller in set_partitions(n - 1) {
        let label = n as Label;
        for i in 0..smaller.len() {
            let mut next = smaller.clone();
            next[i].insert(label);
            out.push(next);
        }
        let mut fresh = smaller;
        fresh.push(BTreeSet::from([label]));
        out.push(fresh);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn counts() {
        let expected = [1, 3, 10, 37, 151];
        for (i, &c) in expected.iter().enumerate() {
            assert_eq!(enumerate_marked(i + 1).len(), c, "n = {}", i + 1);
        }
    }

    #[test]
    fn operation_examples() {
        let x = MarkedPartition::atom(1);
        let y = MarkedPartition::atom(2);
        let merged = x.comm(&y).unwrap();
        assert_eq!(merged.marked(), &BTreeSet::from([1, 2]));
        assert!(merged.blocks().is_empty());

        let appended = x.perm(&y).unwrap();
        assert_eq!(appended.marked(), &BTreeSet::from([1]));
        assert_eq!(appended.blocks().len(), 1);
        assert!(appended.blocks().contains(&BTreeSet::from([2])));
    }

    #[test]
    fn overlap_rejected() {
        let x = MarkedPartition::atom(1);
        assert_eq!(
            x.comm(&x),
            Err(PartitionError::GroundOverlap(1))
        );
        assert!(MarkedPartition::new(BTreeSet::new(), BTreeSet::new()).is_err());
        assert!(MarkedPartition::new(
            BTreeSet::from([1]),
            BTreeSet::from([BTreeSet::from([1])])
        )
        .is_err());
    }

    fn random_partition(rng: &mut ChaCha8Rng, offset: Label) -> MarkedPartition {
        let n = rng.gen_range(1..=4);
        let all = enumerate_marked(n);
        all.choose(rng).unwrap().shift_labels(offset)
    }

    #[test]
    fn laws_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..100 {
            let x = random_partition(&mut rng, 0);
            let y = random_partition(&mut rng, 100);
            let z = random_partition(&mut rng, 200);
            // commutativity
            assert_eq!(x.comm(&y).unwrap(), y.comm(&x).unwrap());
            // entanglement (x . y) * z = x . (y * z)
            assert_eq!(
                x.comm(&y).unwrap().perm(&z).unwrap(),
                x.comm(&y.perm(&z).unwrap()).unwrap()
            );
            // right permutativity x * y * z = x * z * y
            assert_eq!(
                x.perm(&y).unwrap().perm(&z).unwrap(),
                x.perm(&z).unwrap().perm(&y).unwrap()
            );
            // associativity of both products
            assert_eq!(
                x.comm(&y).unwrap().comm(&z).unwrap(),
                x.comm(&y.comm(&z).unwrap()).unwrap()
            );
            assert_eq!(
                x.perm(&y).unwrap().perm(&z).unwrap(),
                x.perm(&y.perm(&z).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn json_shape() {
        let x = MarkedPartition::atom(1).perm(&MarkedPartition::atom(2)).unwrap();
        assert_eq!(
            x.to_json().to_string(),
            r#"{"blocks":[[2]],"marked":[1]}"#
        );
    }
}
