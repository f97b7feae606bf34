use thiserror::Error;

/// Crate-level error, aggregating the per-layer failures that cross module
/// boundaries (file I/O, rule loading, the sentence pipeline).
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Geom(#[from] crate::geom::GeomError),
    #[error(transparent)]
    Region(#[from] crate::region::RegionError),
    #[error(transparent)]
    Parse(#[from] crate::grammar::ParseError),
    #[error(transparent)]
    Grammar(#[from] crate::grammar::GrammarError),
    #[error(transparent)]
    Sem(#[from] crate::semantics::SemError),
    #[error(transparent)]
    Engine(#[from] crate::engine::EngineError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed json: {0}")]
    Json(#[from] serde_json::Error),
}
