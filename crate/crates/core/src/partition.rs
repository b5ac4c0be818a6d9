use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// A partition of `{0, …, n-1}` into nonempty, pairwise-disjoint blocks.
///
/// Stored in canonical form: elements inside each block ascend, and blocks
/// are ordered by their minimum element. Canonical form makes equality,
/// certificates, and enumeration order deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl SetPartition {
    /// Builds a partition from a list of blocks, canonicalizing their order.
    /// Fails unless the blocks are nonempty, disjoint, and cover `{0, …, n-1}`.
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self, Error> {
        if n == 0 || blocks.is_empty() {
            return Err(Error::EmptyBlock { block: 0 });
        }
        let mut covered = alloc::vec![false; n];
        for (b, block) in blocks.iter_mut().enumerate() {
            if block.is_empty() {
                return Err(Error::EmptyBlock { block: b });
            }
            block.sort_unstable();
            for &x in block.iter() {
                if x >= n {
                    return Err(Error::ElementOutOfRange { value: x, n });
                }
                if covered[x] {
                    return Err(Error::DuplicateElement { value: x });
                }
                covered[x] = true;
            }
        }
        if let Some(value) = covered.iter().position(|&c| !c) {
            return Err(Error::UncoveredElement { value });
        }
        blocks.sort_unstable_by_key(|block| block[0]);
        let mut block_of = alloc::vec![0; n];
        for (i, block) in blocks.iter().enumerate() {
            for &x in block {
                block_of[x] = i;
            }
        }
        Ok(SetPartition { n, blocks, block_of })
    }

    /// The partition into singleton blocks.
    pub fn discrete(n: usize) -> Self {
        assert!(n > 0, "partitions need a nonempty ground set");
        SetPartition {
            n,
            blocks: (0..n).map(|x| alloc::vec![x]).collect(),
            block_of: (0..n).collect(),
        }
    }

    /// The partition with a single block `{0, …, n-1}`.
    pub fn single_block(n: usize) -> Self {
        assert!(n > 0, "partitions need a nonempty ground set");
        SetPartition {
            n,
            blocks: alloc::vec![(0..n).collect()],
            block_of: alloc::vec![0; n],
        }
    }

    /// Builds a partition from a restricted growth string: position `x`
    /// holds the block index of `x`, blocks numbered by first appearance.
    pub fn from_rgs(rgs: &[usize]) -> Result<Self, Error> {
        let n = rgs.len();
        if n == 0 {
            return Err(Error::EmptyBlock { block: 0 });
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (x, &b) in rgs.iter().enumerate() {
            if b > blocks.len() {
                return Err(Error::ElementOutOfRange { value: b, n });
            }
            if b == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[b].push(x);
        }
        SetPartition::new(n, blocks)
    }

    /// Size of the ground set.
    pub fn size(&self) -> usize {
        self.n
    }

    /// Number of blocks, `m = |I|`.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &[usize] {
        &self.blocks[i]
    }

    /// Index of the block containing `x`.
    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    /// Whether `x` and `y` lie in the same block (the induced equivalence).
    pub fn related(&self, x: usize, y: usize) -> bool {
        self.block_of[x] == self.block_of[y]
    }

    pub fn is_discrete(&self) -> bool {
        self.blocks.len() == self.n
    }

    pub fn is_single_block(&self) -> bool {
        self.blocks.len() == 1
    }

    /// Whether every block is a singleton or there is a single block.
    pub fn is_trivial(&self) -> bool {
        self.is_discrete() || self.is_single_block()
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            write!(f, "{{")?;
            for (k, x) in block.iter().enumerate() {
                if k > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

/// Iterates over every partition of `{0, …, n-1}` exactly once, in
/// lexicographic order of restricted growth strings. The first partition is
/// the single block, the last is the discrete one.
pub fn all_partitions(n: usize) -> Partitions {
    assert!(n > 0, "partitions need a nonempty ground set");
    Partitions {
        rgs: alloc::vec![0; n],
        fresh: true,
        done: false,
    }
}

pub struct Partitions {
    rgs: Vec<usize>,
    fresh: bool,
    done: bool,
}

impl Iterator for Partitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        if self.fresh {
            self.fresh = false;
            return Some(SetPartition::from_rgs(&self.rgs).expect("valid growth string"));
        }
        // Advance to the next restricted growth string: find the rightmost
        // position that can still grow, bump it, reset the tail to zero.
        let n = self.rgs.len();
        let mut k = n;
        while k > 1 {
            k -= 1;
            let prefix_max = self.rgs[..k].iter().copied().max().unwrap_or(0);
            if self.rgs[k] <= prefix_max {
                self.rgs[k] += 1;
                for entry in &mut self.rgs[k + 1..] {
                    *entry = 0;
                }
                return Some(SetPartition::from_rgs(&self.rgs).expect("valid growth string"));
            }
        }
        self.done = true;
        None
    }
}
