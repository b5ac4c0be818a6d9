use alloc::vec::Vec;

use crate::error::Error;
use crate::partition::SetPartition;
use crate::transform::Transformation;

/// The map induced by `f` on a single block: `X_i → X_{iχ}`, stored as
/// `(x, xf)` pairs over the block elements in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockMap {
    source: usize,
    target: usize,
    pairs: Vec<(usize, usize)>,
    codomain_size: usize,
}

/// Collapse, defect, injectivity, and surjectivity of one induced block map,
/// measured against its codomain block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockMapStats {
    pub collapse: usize,
    pub defect: usize,
    pub injective: bool,
    pub surjective: bool,
}

impl BlockMap {
    pub fn source_block(&self) -> usize {
        self.source
    }

    pub fn target_block(&self) -> usize {
        self.target
    }

    /// `(x, xf)` for every `x` in the source block, ascending in `x`.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Distinct image points of this block map, ascending.
    pub fn image(&self) -> Vec<usize> {
        let mut image: Vec<usize> = self.pairs.iter().map(|&(_, y)| y).collect();
        image.sort_unstable();
        image.dedup();
        image
    }

    /// `c(f_i) = |X_i| - |im(f_i)|`.
    pub fn collapse(&self) -> usize {
        self.pairs.len() - self.image().len()
    }

    /// `d(f_i) = |X_{iχ}| - |im(f_i)|`.
    pub fn defect(&self) -> usize {
        self.codomain_size - self.image().len()
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.pairs.len()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.codomain_size
    }

    pub fn stats(&self) -> BlockMapStats {
        let stats = BlockMapStats {
            collapse: self.collapse(),
            defect: self.defect(),
            injective: self.is_injective(),
            surjective: self.is_surjective(),
        };
        debug_assert_eq!(stats.injective, stats.collapse == 0);
        debug_assert_eq!(stats.surjective, stats.defect == 0);
        stats
    }
}

/// The character of a partition-preserving map together with its unique
/// family of induced block maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    partition: SetPartition,
    character: Transformation,
    block_maps: Vec<BlockMap>,
}

impl BlockDecomposition {
    pub fn partition(&self) -> &SetPartition {
        &self.partition
    }

    /// The induced map on block indices: `iχ = j` whenever `X_i f ⊆ X_j`.
    pub fn character(&self) -> &Transformation {
        &self.character
    }

    pub fn block_maps(&self) -> &[BlockMap] {
        &self.block_maps
    }

    pub fn block_map(&self, i: usize) -> &BlockMap {
        &self.block_maps[i]
    }

    pub fn block_map_stats(&self, i: usize) -> BlockMapStats {
        self.block_maps[i].stats()
    }

    /// The image of the character, `Iχ`, sorted ascending.
    pub fn hit_blocks(&self) -> Vec<usize> {
        self.character.image_set()
    }

    /// Rebuilds the underlying transformation from the block maps.
    pub fn reassemble(&self) -> Transformation {
        let mut images = alloc::vec![0; self.partition.size()];
        for map in &self.block_maps {
            for &(x, y) in map.pairs() {
                images[x] = y;
            }
        }
        Transformation::new(images).expect("block maps cover the domain")
    }
}

/// Splits `f` along `p` into its character map and block family. Fails with
/// the first block (in canonical order) whose image straddles two blocks.
///
/// Panics if `f` and `p` disagree on the ground-set size.
pub fn decompose(f: &Transformation, p: &SetPartition) -> Result<BlockDecomposition, Error> {
    assert_eq!(
        f.degree(),
        p.size(),
        "transformation and partition must share a ground set"
    );
    let mut character = Vec::with_capacity(p.block_count());
    let mut block_maps = Vec::with_capacity(p.block_count());
    for (i, block) in p.blocks().iter().enumerate() {
        let target = p.block_of(f.apply(block[0]));
        let mut pairs = Vec::with_capacity(block.len());
        for &x in block {
            let y = f.apply(x);
            if p.block_of(y) != target {
                return Err(Error::NotPartitionPreserving { block: i });
            }
            pairs.push((x, y));
        }
        character.push(target);
        block_maps.push(BlockMap {
            source: i,
            target,
            pairs,
            codomain_size: p.block(target).len(),
        });
    }
    Ok(BlockDecomposition {
        partition: p.clone(),
        character: Transformation::new(character).expect("block indices are in range"),
        block_maps,
    })
}
