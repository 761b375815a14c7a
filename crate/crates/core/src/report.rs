use serde::Serialize;

/// Evidence attached to a failed check, in printable form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<String>,
    /// Subcube or oriented-edge labels, `forest@param`.
    pub cells: Vec<String>,
}

impl Witness {
    pub fn new(kind: &str, vertex: Option<String>, cells: Vec<String>) -> Self {
        Witness { kind: kind.to_string(), vertex, cells }
    }
}

/// Version string embedded in reports.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
