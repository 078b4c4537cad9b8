//! Instance files, command reports and their rendering for the `gsym` binary.

pub mod report;
pub mod spec;

use gsym_core::twocat::Instance;
use gsym_core::Error;

/// Parses and builds an instance file.
pub fn load(text: &str) -> Result<Instance, LoadError> {
    let spec = spec::parse_spec(text).map_err(LoadError::Parse)?;
    let (a, act) = spec.build().map_err(LoadError::Build)?;
    Ok(Instance::new(a, act))
}

#[derive(Debug)]
pub enum LoadError {
    Parse(spec::ParseError),
    Build(Error),
}

impl std::fmt::Display for LoadError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LoadError::Parse(e) => write!(f, "parse error at {e}"),
            LoadError::Build(e) => write!(f, "invalid instance ({}): {e}", e.name()),
        }
    }
}
