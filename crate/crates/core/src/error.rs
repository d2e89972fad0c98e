use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid order/dimension: k={k}, n={n} (both must be >= 1)")]
    InvalidOrderDim { k: u32, n: u32 },

    #[error("bound-violated: no sign change of P_{k}(n) on [{lo}, {hi})")]
    BoundViolated { k: u32, lo: u32, hi: u32 },

    #[error("sign pattern violated for k={k}: P_k({n}) has unexpected sign")]
    SignPattern { k: u32, n: u32 },

    #[error("ratio factors need N > 2k+1 (k={k}, N={big_n})")]
    RatioDomain { k: u32, big_n: u32 },

    #[error("invalid range [{lo}, {hi}]")]
    InvalidRange { lo: u32, hi: u32 },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("grid has {points} points, stencil needs at least {needed}")]
    GridTooSmall { points: usize, needed: usize },

    #[error("invalid cutoff: {0}")]
    InvalidCutoff(String),

    #[error("non-finite value in grid function at node {0}")]
    NonFinite(usize),

    #[error("weighted L2 denominator underflows ({0:e})")]
    DenominatorUnderflow(f64),

    #[error("P_{k}({n}) >= 0: the equator map is not unstable there")]
    NotUnstable { k: u32, n: u32 },

    #[error("k={0} exceeds the floating-point certificate limit (k <= 8)")]
    OrderTooLarge(u32),

    #[error("no instability witness found within a budget of {budget} evaluations")]
    NotFound { budget: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
