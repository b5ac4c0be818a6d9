//! Membership deciders and enumerators for the transformation monoids under
//! study: the full monoid `T(X)`, the partition-preserving monoid `T(X,P)`,
//! its submonoids `Σ(X,P)`, `Γ(X,P)`, `T_E*(X)`, `Ω(X,P)`, the unit group
//! `S(X,P)`, and the symmetric group `S(X)`.
//!
//! On a finite ground set the injective and the surjective selfmaps both
//! coincide with `S(X)`, so `SymmetricS` stands in for both.

use alloc::vec::Vec;

use crate::block::decompose;
use crate::error::Error;
use crate::partition::SetPartition;
use crate::transform::Transformation;

/// Names a monoid; partition-relative monoids carry their partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonoidId {
    /// `T(X)`, all selfmaps.
    FullT,
    /// `S(X)`, all permutations.
    SymmetricS,
    /// `T(X,P)`: every block maps into a single block.
    Txp(SetPartition),
    /// `Σ(X,P)`: members of `T(X,P)` whose image meets every block.
    SigmaXp(SetPartition),
    /// `Γ(X,P)`: members of `T(X,P)` mapping each block onto a block.
    GammaXp(SetPartition),
    /// `T_E*(X)`: maps that preserve and reflect the block equivalence.
    TeStar(SetPartition),
    /// `Ω(X,P)`: members of `T(X,P)` injective on every block.
    OmegaXp(SetPartition),
    /// `S(X,P)`: the group of units of `T(X,P)`.
    Sxp(SetPartition),
}

impl MonoidId {
    /// Conventional display name.
    pub fn name(&self) -> &'static str {
        match self {
            MonoidId::FullT => "T(X)",
            MonoidId::SymmetricS => "S(X)",
            MonoidId::Txp(_) => "T(X,P)",
            MonoidId::SigmaXp(_) => "Sigma(X,P)",
            MonoidId::GammaXp(_) => "Gamma(X,P)",
            MonoidId::TeStar(_) => "T_E*(X)",
            MonoidId::OmegaXp(_) => "Omega(X,P)",
            MonoidId::Sxp(_) => "S(X,P)",
        }
    }

    /// Stable machine-readable tag.
    pub fn tag(&self) -> &'static str {
        match self {
            MonoidId::FullT => "full",
            MonoidId::SymmetricS => "symmetric",
            MonoidId::Txp(_) => "txp",
            MonoidId::SigmaXp(_) => "sigma",
            MonoidId::GammaXp(_) => "gamma-xp",
            MonoidId::TeStar(_) => "te-star",
            MonoidId::OmegaXp(_) => "omega-xp",
            MonoidId::Sxp(_) => "sxp",
        }
    }

    pub fn partition(&self) -> Option<&SetPartition> {
        match self {
            MonoidId::FullT | MonoidId::SymmetricS => None,
            MonoidId::Txp(p)
            | MonoidId::SigmaXp(p)
            | MonoidId::GammaXp(p)
            | MonoidId::TeStar(p)
            | MonoidId::OmegaXp(p)
            | MonoidId::Sxp(p) => Some(p),
        }
    }

    /// The group of units: `S(X)` for the partition-free monoids, `S(X,P)`
    /// for every partition-relative one (they all share it).
    pub fn unit_group(&self) -> MonoidId {
        match self.partition() {
            None => MonoidId::SymmetricS,
            Some(p) => MonoidId::Sxp(p.clone()),
        }
    }

    fn is_permutation_group(&self) -> bool {
        matches!(self, MonoidId::SymmetricS | MonoidId::Sxp(_))
    }
}

fn assert_degree(f: &Transformation, m: &MonoidId) {
    if let Some(p) = m.partition() {
        assert_eq!(
            f.degree(),
            p.size(),
            "transformation and monoid partition must share a ground set"
        );
    }
}

fn preserves_partition(f: &Transformation, p: &SetPartition) -> bool {
    p.blocks().iter().all(|block| {
        let target = p.block_of(f.apply(block[0]));
        block.iter().all(|&x| p.block_of(f.apply(x)) == target)
    })
}

/// Decides membership straight from the defining condition of each monoid,
/// with no character shortcut.
pub fn is_member(f: &Transformation, m: &MonoidId) -> bool {
    assert_degree(f, m);
    let n = f.degree();
    match m {
        MonoidId::FullT => true,
        MonoidId::SymmetricS => f.is_permutation(),
        MonoidId::Txp(p) => preserves_partition(f, p),
        MonoidId::SigmaXp(p) => {
            if !preserves_partition(f, p) {
                return false;
            }
            let image = f.image_set();
            p.blocks()
                .iter()
                .all(|block| image.iter().any(|&y| p.block_of(y) == p.block_of(block[0])))
        }
        MonoidId::GammaXp(p) => {
            preserves_partition(f, p)
                && p.blocks().iter().all(|block| {
                    let mut image: Vec<usize> = block.iter().map(|&x| f.apply(x)).collect();
                    image.sort_unstable();
                    image.dedup();
                    image == p.block(p.block_of(image[0]))
                })
        }
        MonoidId::TeStar(p) => {
            // (x, y) in E  <=>  (xf, yf) in E, for all pairs.
            for x in 0..n {
                for y in x + 1..n {
                    if p.related(x, y) != p.related(f.apply(x), f.apply(y)) {
                        return false;
                    }
                }
            }
            true
        }
        MonoidId::OmegaXp(p) => {
            if !preserves_partition(f, p) {
                return false;
            }
            for x in 0..n {
                for y in x + 1..n {
                    if p.related(x, y) && f.apply(x) == f.apply(y) {
                        return false;
                    }
                }
            }
            true
        }
        MonoidId::Sxp(p) => {
            // A unit of T(X,P): invertible, with the inverse again in T(X,P).
            f.is_permutation()
                && preserves_partition(f, p)
                && preserves_partition(&f.inverse().expect("checked bijective"), p)
        }
    }
}

/// Decides membership through the character map and block family of `f`.
///
/// Requires `f ∈ T(X,P)` for partition-relative monoids and reports
/// `NotPartitionPreserving` otherwise. For `FullT` and `SymmetricS` there is
/// no character to consult; the direct criterion applies.
pub fn is_member_by_character(f: &Transformation, m: &MonoidId) -> Result<bool, Error> {
    assert_degree(f, m);
    let p = match m {
        MonoidId::FullT => return Ok(true),
        MonoidId::SymmetricS => return Ok(f.is_permutation()),
        _ => m.partition().expect("partition-relative tag"),
    };
    let d = decompose(f, p)?;
    Ok(match m {
        MonoidId::Txp(_) => true,
        MonoidId::SigmaXp(_) => d.character().image_set().len() == p.block_count(),
        MonoidId::GammaXp(_) => d.block_maps().iter().all(|fi| fi.is_surjective()),
        MonoidId::TeStar(_) => d.character().is_permutation() || {
            // On a finite index set injective and bijective coincide; spelled
            // out as an injectivity check on the character images.
            let im = d.character().image_set();
            im.len() == p.block_count()
        },
        MonoidId::OmegaXp(_) => d.block_maps().iter().all(|fi| fi.is_injective()),
        MonoidId::Sxp(_) => {
            d.character().is_permutation()
                && d.block_maps().iter().all(|fi| fi.is_injective() && fi.is_surjective())
        }
        MonoidId::FullT | MonoidId::SymmetricS => unreachable!(),
    })
}

/// Default enumeration cap: permutation groups stream up to `n = 8`, the
/// larger monoids up to `n = 7`.
pub fn default_enumeration_cap(m: &MonoidId) -> usize {
    if m.is_permutation_group() {
        8
    } else {
        7
    }
}

/// Streams every member of `m` on `n` points exactly once, in lexicographic
/// order of image lists, using the default cap.
pub fn enumerate(m: &MonoidId, n: usize) -> Result<MonoidIter, Error> {
    enumerate_with_cap(m, n, default_enumeration_cap(m))
}

/// As [`enumerate`], with an explicit cap.
pub fn enumerate_with_cap(m: &MonoidId, n: usize, cap: usize) -> Result<MonoidIter, Error> {
    if let Some(p) = m.partition() {
        assert_eq!(p.size(), n, "partition size must match the requested degree");
    }
    assert!(n > 0, "transformations need a nonempty domain");
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(MonoidIter {
        monoid: m.clone(),
        n,
        images: alloc::vec![0; n],
        depth: 0,
        started: false,
        finished: false,
    })
}

/// Number of members of `m` on `n` points.
pub fn count(m: &MonoidId, n: usize) -> Result<u64, Error> {
    Ok(enumerate(m, n)?.count() as u64)
}

/// Depth-first lexicographic enumerator.
///
/// Candidates are produced position by position; the per-monoid feasibility
/// check prunes whole subtrees (for partition-relative monoids, a block's
/// target is pinned by its least element, so candidates never leave that
/// block). Feasible prefixes of `Σ` and `Γ` can still die at full length,
/// which the completion check rejects; the remaining monoids are prefix-exact.
pub struct MonoidIter {
    monoid: MonoidId,
    n: usize,
    images: Vec<usize>,
    depth: usize,
    started: bool,
    finished: bool,
}

impl MonoidIter {
    /// Target block already pinned for the block of `x` by an earlier
    /// element, if any.
    fn pinned_target(&self, p: &SetPartition, x: usize) -> Option<usize> {
        let b = p.block_of(x);
        (0..x)
            .find(|&e| p.block_of(e) == b)
            .map(|e| p.block_of(self.images[e]))
    }

    /// Whether `y` may extend the current prefix at position `x`.
    fn feasible(&self, x: usize, y: usize) -> bool {
        match &self.monoid {
            MonoidId::FullT => true,
            MonoidId::SymmetricS => !self.images[..x].contains(&y),
            MonoidId::Txp(p) | MonoidId::SigmaXp(p) | MonoidId::GammaXp(p) => {
                let within = match self.pinned_target(p, x) {
                    Some(t) => p.block_of(y) == t,
                    None => true,
                };
                if !within {
                    return false;
                }
                if matches!(self.monoid, MonoidId::GammaXp(_))
                    && self.pinned_target(p, x).is_none()
                {
                    // A block cannot map onto a strictly larger one.
                    return p.block(p.block_of(y)).len() <= p.block(p.block_of(x)).len();
                }
                true
            }
            MonoidId::TeStar(p) => match self.pinned_target(p, x) {
                Some(t) => p.block_of(y) == t,
                None => {
                    // Distinct blocks must take distinct targets.
                    let target = p.block_of(y);
                    let b = p.block_of(x);
                    !(0..x).any(|e| {
                        p.block_of(e) != b && p.block_of(self.images[e]) == target
                    })
                }
            },
            MonoidId::OmegaXp(p) => {
                let b = p.block_of(x);
                if (0..x).any(|e| p.block_of(e) == b && self.images[e] == y) {
                    return false;
                }
                match self.pinned_target(p, x) {
                    Some(t) => p.block_of(y) == t,
                    // An injective block map needs a target at least as large.
                    None => p.block(p.block_of(y)).len() >= p.block(b).len(),
                }
            }
            MonoidId::Sxp(p) => {
                if self.images[..x].contains(&y) {
                    return false;
                }
                let b = p.block_of(x);
                match self.pinned_target(p, x) {
                    Some(t) => p.block_of(y) == t,
                    None => {
                        let target = p.block_of(y);
                        // Block moves must pair blocks of equal size, one to one.
                        p.block(target).len() == p.block(b).len()
                            && !(0..x).any(|e| {
                                p.block_of(e) != b && p.block_of(self.images[e]) == target
                            })
                    }
                }
            }
        }
    }

    /// Final acceptance for the monoids whose feasible prefixes over-approximate.
    fn complete_ok(&self) -> bool {
        match &self.monoid {
            MonoidId::SigmaXp(p) => {
                let mut met = alloc::vec![false; p.block_count()];
                for &y in &self.images {
                    met[p.block_of(y)] = true;
                }
                met.iter().all(|&m| m)
            }
            MonoidId::GammaXp(p) => p.blocks().iter().all(|block| {
                let mut image: Vec<usize> = block.iter().map(|&x| self.images[x]).collect();
                image.sort_unstable();
                image.dedup();
                image.len() == p.block(p.block_of(image[0])).len()
            }),
            _ => true,
        }
    }

    fn advance(&mut self) -> bool {
        let n = self.n;
        let mut trying;
        if !self.started {
            self.started = true;
            self.depth = 0;
            trying = 0;
        } else {
            self.depth = n - 1;
            trying = self.images[self.depth] + 1;
        }
        loop {
            if trying >= n {
                if self.depth == 0 {
                    return false;
                }
                self.depth -= 1;
                trying = self.images[self.depth] + 1;
                continue;
            }
            if self.feasible(self.depth, trying) {
                self.images[self.depth] = trying;
                self.depth += 1;
                if self.depth == n {
                    if self.complete_ok() {
                        return true;
                    }
                    self.depth = n - 1;
                    trying = self.images[self.depth] + 1;
                    continue;
                }
                trying = 0;
            } else {
                trying += 1;
            }
        }
    }
}

impl Iterator for MonoidIter {
    type Item = Transformation;

    fn next(&mut self) -> Option<Transformation> {
        if self.finished {
            return None;
        }
        if self.advance() {
            Some(Transformation::new(self.images.clone()).expect("enumerator emits valid maps"))
        } else {
            self.finished = true;
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn t(images: &[usize]) -> Transformation {
        Transformation::new(images.to_vec()).unwrap()
    }

    fn p22() -> SetPartition {
        SetPartition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap()
    }

    #[test]
    fn definitional_membership_examples() {
        let p = p22();
        let f = t(&[0, 0, 0, 1]);
        assert!(is_member(&f, &MonoidId::Txp(p.clone())));
        assert!(!is_member(&f, &MonoidId::SigmaXp(p.clone())));
        assert!(!is_member(&f, &MonoidId::OmegaXp(p.clone())));

        let id = Transformation::identity(4);
        for m in [
            MonoidId::FullT,
            MonoidId::SymmetricS,
            MonoidId::Txp(p.clone()),
            MonoidId::SigmaXp(p.clone()),
            MonoidId::GammaXp(p.clone()),
            MonoidId::TeStar(p.clone()),
            MonoidId::OmegaXp(p.clone()),
            MonoidId::Sxp(p.clone()),
        ] {
            assert!(is_member(&id, &m), "identity not in {}", m.name());
        }

        let swap = t(&[2, 3, 0, 1]);
        for m in [
            MonoidId::Txp(p.clone()),
            MonoidId::SigmaXp(p.clone()),
            MonoidId::GammaXp(p.clone()),
            MonoidId::TeStar(p.clone()),
            MonoidId::OmegaXp(p.clone()),
            MonoidId::Sxp(p.clone()),
        ] {
            assert!(is_member(&swap, &m), "block swap not in {}", m.name());
        }
    }

    #[test]
    fn character_membership_examples() {
        let p = p22();
        let f = t(&[2, 2, 1, 0]);
        assert!(!is_member_by_character(&f, &MonoidId::Sxp(p.clone())).unwrap());
        assert!(is_member_by_character(&f, &MonoidId::TeStar(p.clone())).unwrap());
        assert!(is_member_by_character(&f, &MonoidId::SigmaXp(p.clone())).unwrap());

        let p23 = SetPartition::new(5, vec![vec![0, 1], vec![2, 3, 4]]).unwrap();
        let g = t(&[2, 3, 2, 3, 4]);
        assert!(!is_member_by_character(&g, &MonoidId::SigmaXp(p23.clone())).unwrap());
        assert!(!is_member_by_character(&g, &MonoidId::TeStar(p23.clone())).unwrap());

        let off = t(&[0, 2, 1, 3]);
        assert_eq!(
            is_member_by_character(&off, &MonoidId::Txp(p)),
            Err(Error::NotPartitionPreserving { block: 0 })
        );
    }

    #[test]
    fn enumerates_symmetric_group() {
        let perms: Vec<Transformation> = enumerate(&MonoidId::SymmetricS, 3).unwrap().collect();
        assert_eq!(perms.len(), 6);
        assert_eq!(perms[0], Transformation::identity(3));
        assert_eq!(perms[5], t(&[2, 1, 0]));
        assert!(perms.windows(2).all(|w| w[0].images() < w[1].images()));
    }

    #[test]
    fn full_monoid_counts() {
        assert_eq!(count(&MonoidId::FullT, 3).unwrap(), 27);
        assert_eq!(count(&MonoidId::SymmetricS, 4).unwrap(), 24);
    }

    #[test]
    fn txp_count_matches_brute_filter() {
        let p = p22();
        let m = MonoidId::Txp(p);
        let filtered = enumerate(&MonoidId::FullT, 4)
            .unwrap()
            .filter(|f| is_member(f, &m))
            .count();
        assert_eq!(filtered, 64); // 2 * 2^4 + 2 * 2^4
        assert_eq!(count(&m, 4).unwrap(), filtered as u64);
    }

    #[test]
    fn sxp_count_matches_brute_filter() {
        let p = p22();
        let m = MonoidId::Sxp(p);
        let filtered: Vec<Transformation> = enumerate(&MonoidId::SymmetricS, 4)
            .unwrap()
            .filter(|f| is_member(f, &m))
            .collect();
        assert_eq!(filtered.len(), 8); // 2 block swaps x 2 x 2 within blocks
        let streamed: Vec<Transformation> = enumerate(&m, 4).unwrap().collect();
        assert_eq!(streamed, filtered);
    }

    #[test]
    fn sigma_count_matches_brute_filter() {
        let p = SetPartition::new(3, vec![vec![0, 1], vec![2]]).unwrap();
        let m = MonoidId::SigmaXp(p);
        let filtered: Vec<Transformation> = enumerate(&MonoidId::FullT, 3)
            .unwrap()
            .filter(|f| is_member(f, &m))
            .collect();
        let streamed: Vec<Transformation> = enumerate(&m, 3).unwrap().collect();
        assert_eq!(streamed, filtered);
        assert_eq!(streamed.len(), 6);
    }

    #[test]
    fn every_stream_matches_its_filter_exhaustively() {
        // n <= 4, all partitions, all six partition-relative monoids.
        for n in 1..=4usize {
            for p in crate::partition::all_partitions(n) {
                for m in [
                    MonoidId::Txp(p.clone()),
                    MonoidId::SigmaXp(p.clone()),
                    MonoidId::GammaXp(p.clone()),
                    MonoidId::TeStar(p.clone()),
                    MonoidId::OmegaXp(p.clone()),
                    MonoidId::Sxp(p.clone()),
                ] {
                    let filtered: Vec<Transformation> = enumerate(&MonoidId::FullT, n)
                        .unwrap()
                        .filter(|f| is_member(f, &m))
                        .collect();
                    let streamed: Vec<Transformation> = enumerate(&m, n).unwrap().collect();
                    assert_eq!(streamed, filtered, "{} over {}", m.name(), p);
                }
            }
        }
    }

    #[test]
    fn cap_is_enforced_and_overridable() {
        assert_eq!(
            enumerate(&MonoidId::FullT, 8).err(),
            Some(Error::CapExceeded { n: 8, cap: 7 })
        );
        assert!(enumerate_with_cap(&MonoidId::FullT, 8, 8).is_ok());
        assert!(enumerate(&MonoidId::SymmetricS, 8).is_ok());
    }

    #[test]
    fn degenerate_partitions_collapse_to_known_monoids() {
        // Singleton blocks: Omega(X,P) = T(X).
        let discrete = SetPartition::discrete(4);
        assert_eq!(count(&MonoidId::OmegaXp(discrete), 4).unwrap(), 256);
        // One block: Omega(X,P) = injective maps = S(X) at finite n.
        let single = SetPartition::single_block(4);
        assert_eq!(count(&MonoidId::OmegaXp(single.clone()), 4).unwrap(), 24);
        // One block: Gamma(X,P) = surjective maps = S(X) at finite n.
        assert_eq!(count(&MonoidId::GammaXp(single), 4).unwrap(), 24);
    }
}
