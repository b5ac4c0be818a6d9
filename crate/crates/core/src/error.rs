use core::fmt;

/// Errors reported by constructors and deciders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A transformation needs at least one point.
    EmptyDomain,
    /// An image entry falls outside `{0, …, n-1}`.
    ImageOutOfRange { position: usize, value: usize, n: usize },
    /// A partition must have at least one block and no empty blocks.
    EmptyBlock { block: usize },
    /// A partition element falls outside `{0, …, n-1}`.
    ElementOutOfRange { value: usize, n: usize },
    /// A partition lists the same element twice.
    DuplicateElement { value: usize },
    /// A partition misses an element of `{0, …, n-1}`.
    UncoveredElement { value: usize },
    /// The map sends block `block` into two distinct blocks, so it does not
    /// preserve the partition.
    NotPartitionPreserving { block: usize },
    /// The element lies outside the monoid a decider was asked about.
    NotInMonoid { monoid: &'static str },
    /// An enumeration or oracle scan was requested above its size cap.
    CapExceeded { n: usize, cap: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::EmptyDomain => write!(f, "transformations need a nonempty domain"),
            Error::ImageOutOfRange { position, value, n } => {
                write!(f, "image {value} at position {position} is outside 0..{n}")
            }
            Error::EmptyBlock { block } => write!(f, "block {block} is empty"),
            Error::ElementOutOfRange { value, n } => {
                write!(f, "partition element {value} is outside 0..{n}")
            }
            Error::DuplicateElement { value } => {
                write!(f, "element {value} appears in more than one block")
            }
            Error::UncoveredElement { value } => {
                write!(f, "element {value} is not covered by any block")
            }
            Error::NotPartitionPreserving { block } => {
                write!(f, "map sends block {block} into two distinct blocks")
            }
            Error::NotInMonoid { monoid } => write!(f, "element is not a member of {monoid}"),
            Error::CapExceeded { n, cap } => {
                write!(f, "degree {n} exceeds the enumeration cap {cap}")
            }
        }
    }
}

impl core::error::Error for Error {}
