use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors reported by parsing and by partial operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed forest, element, or binary-tree text. `offset` is a byte
    /// offset into the original input.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// Operation requires a counit-zero element (augmentation ideal).
    #[error("element is not in the augmentation ideal: counit is {counit}")]
    NotAugmentation { counit: String },

    /// Vertex index outside `1..=weight`.
    #[error("vertex index {index} out of range 1..={weight}")]
    VertexIndex { index: usize, weight: usize },

    /// Biideal size outside `0..=weight`.
    #[error("biideal size {size} out of range 0..={weight}")]
    BiidealSize { size: usize, weight: usize },

    /// A tree-only operation was applied to a forest with `trees` trees.
    #[error("expected a forest with exactly one tree, got {trees}")]
    NotATree { trees: usize },

    /// Dual-basis products are defined for nonempty factors only.
    #[error("dual-basis product factors must be nonempty forests")]
    EmptyFactor,

    /// Weights of the two sides disagree where equality is required.
    #[error("weight mismatch: {left} vs {right}")]
    WeightMismatch { left: usize, right: usize },

    /// The Gram matrix failed to invert (cannot happen for a non-degenerate
    /// pairing; kept so the solver reports rather than panics).
    #[error("Gram matrix at weight {weight} is singular")]
    SingularGram { weight: usize },
}
