use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// A total selfmap on `{0, …, n-1}`, written on the right: position `x` of
/// the image list holds `xf`.
///
/// Values are immutable after construction; every operation returns a new
/// transformation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    images: Vec<usize>,
}

impl Transformation {
    /// Builds a transformation from its image list. Fails on an empty list
    /// or an entry outside `{0, …, n-1}`.
    pub fn new(images: Vec<usize>) -> Result<Self, Error> {
        if images.is_empty() {
            return Err(Error::EmptyDomain);
        }
        let n = images.len();
        for (position, &value) in images.iter().enumerate() {
            if value >= n {
                return Err(Error::ImageOutOfRange { position, value, n });
            }
        }
        Ok(Transformation { images })
    }

    /// The identity map on `n` points.
    pub fn identity(n: usize) -> Self {
        assert!(n > 0, "transformations need a nonempty domain");
        Transformation {
            images: (0..n).collect(),
        }
    }

    /// The constant map sending every point to `target`.
    pub fn constant(n: usize, target: usize) -> Self {
        assert!(n > 0, "transformations need a nonempty domain");
        assert!(target < n, "constant target {target} outside 0..{n}");
        Transformation {
            images: alloc::vec![target; n],
        }
    }

    /// Number of points in the domain.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `xf` for a single point.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn into_images(self) -> Vec<usize> {
        self.images
    }

    /// Right-action composition: position `x` of `f.compose(g)` holds `(xf)g`.
    ///
    /// Panics if the degrees differ.
    pub fn compose(&self, g: &Transformation) -> Transformation {
        assert_eq!(
            self.degree(),
            g.degree(),
            "cannot compose transformations of different degree"
        );
        Transformation {
            images: self.images.iter().map(|&y| g.images[y]).collect(),
        }
    }

    /// The image `Xf` as a sorted, duplicate-free list.
    pub fn image_set(&self) -> Vec<usize> {
        let mut seen = alloc::vec![false; self.degree()];
        for &y in &self.images {
            seen[y] = true;
        }
        (0..self.degree()).filter(|&y| seen[y]).collect()
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = alloc::vec![false; self.degree()];
        for &y in &self.images {
            if seen[y] {
                return false;
            }
            seen[y] = true;
        }
        true
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// The inverse permutation, or `None` if the map is not bijective.
    pub fn inverse(&self) -> Option<Transformation> {
        if !self.is_permutation() {
            return None;
        }
        let mut inv = alloc::vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Some(Transformation { images: inv })
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, y) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{y}")?;
        }
        write!(f, "]")
    }
}
