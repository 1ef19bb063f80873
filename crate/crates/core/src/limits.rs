/// Bounds on exhaustive work. Exceeding either yields [`crate::Error::SizeLimit`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest graph order accepted by minimal-dominating-set enumeration.
    pub max_vertices: usize,
    /// Largest number of minimal dominating sets collected before giving up.
    pub max_mds: usize,
}

impl Limits {
    pub const DEFAULT_MAX_VERTICES: usize = 24;
    pub const DEFAULT_MAX_MDS: usize = 200_000;

    pub fn with_max_mds(self, max_mds: usize) -> Self {
        Self { max_mds, ..self }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_vertices: Self::DEFAULT_MAX_VERTICES,
            max_mds: Self::DEFAULT_MAX_MDS,
        }
    }
}
