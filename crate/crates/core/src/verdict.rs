use serde::Serialize;

/// Outcome of an exact decision procedure. `Unsupported` is returned
/// when a configured cap was exceeded; it is never a silent answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictStatus {
    Holds,
    Fails,
    Unsupported,
}

impl VerdictStatus {
    /// `Some(true)` / `Some(false)` for decided verdicts, `None` for
    /// unsupported ones.
    pub fn decided(self) -> Option<bool> {
        match self {
            VerdictStatus::Holds => Some(true),
            VerdictStatus::Fails => Some(false),
            VerdictStatus::Unsupported => None,
        }
    }
}

impl std::fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VerdictStatus::Holds => write!(f, "HOLDS"),
            VerdictStatus::Fails => write!(f, "FAILS"),
            VerdictStatus::Unsupported => write!(f, "UNSUPPORTED"),
        }
    }
}
