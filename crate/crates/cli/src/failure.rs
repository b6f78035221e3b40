use std::fmt;

/// Everything that ends a command early. The variant decides the exit code.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags, files or parameters: exit 2.
    Invalid { kind: String, message: String },
    /// Inputs were fine but at least one check failed: exit 1.
    ChecksFailed(Vec<String>),
}

impl Failure {
    pub fn invalid(kind: &str, message: impl Into<String>) -> Self {
        Failure::Invalid {
            kind: kind.to_string(),
            message: message.into(),
        }
    }

    pub fn input(message: impl Into<String>) -> Self {
        Self::invalid("InvalidInput", message)
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Invalid { .. } => 2,
            Failure::ChecksFailed(_) => 1,
        }
    }

    /// One-line JSON record for stderr.
    pub fn record(&self) -> serde_json::Value {
        match self {
            Failure::Invalid { kind, message } => serde_json::json!({ "error": kind, "message": message }),
            Failure::ChecksFailed(names) => serde_json::json!({ "error": "CheckFailed", "failed": names }),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Invalid { kind, message } => write!(f, "{kind}: {message}"),
            Failure::ChecksFailed(names) => write!(f, "failed checks: {}", names.join(", ")),
        }
    }
}

impl From<uqgl2::Error> for Failure {
    fn from(e: uqgl2::Error) -> Self {
        Failure::invalid(e.kind(), e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::invalid("Io", e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::invalid("InvalidInput", format!("malformed JSON: {e}"))
    }
}

pub type Outcome<T> = std::result::Result<T, Failure>;
