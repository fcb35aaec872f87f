//! Command layer of the `stau` tool: file formats, result documents, DOT
//! output and the four commands.

pub mod format;
pub mod report;

use std::sync::Arc;

use sha2::{Digest, Sha256};
use stau_core::algebra::BoundQuiverAlgebra;
use stau_core::homology::tau;
use stau_core::opext::{extend, verify_extension_theorems};
use stau_core::rep::{decompose, Representation};
use stau_core::tautilt::{enumerate_stau, EnumOptions, Labeler};
use thiserror::Error;

pub use report::{EnumerationDocument, VerificationDocument};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Core(stau_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl From<stau_core::Error> for CliError {
    fn from(e: stau_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    /// 2 for resource caps, 3 for bad input.
    pub fn exit_code(&self) -> i32 {
        use stau_core::Error as E;
        match self {
            CliError::Core(E::CapExceeded(_) | E::UndecidedIsomorphism | E::DecompositionUndecided(_)) => 2,
            _ => 3,
        }
    }
}

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Hex SHA-256 over the given inputs, each followed by a NUL byte.
pub fn input_digest(inputs: &[&str]) -> String {
    let mut h = Sha256::new();
    for i in inputs {
        h.update(i.as_bytes());
        h.update([0u8]);
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub max_nodes: usize,
    pub dim_cap: usize,
    pub threads: Option<usize>,
}

impl Default for Caps {
    fn default() -> Self {
        let d = EnumOptions::default();
        Caps {
            max_nodes: d.node_cap,
            dim_cap: d.dim_cap,
            threads: None,
        }
    }
}

impl Caps {
    fn options(self) -> EnumOptions {
        EnumOptions {
            node_cap: self.max_nodes,
            dim_cap: self.dim_cap,
            threads: self.threads,
        }
    }
}

pub struct EnumerateOutput {
    pub summary: String,
    pub document: EnumerationDocument,
    pub json: String,
    pub dot: String,
}

pub fn cmd_enumerate(algebra_text: &str, field: Option<u32>, caps: Caps) -> Result<EnumerateOutput, CliError> {
    let alg = format::parse_algebra(algebra_text, field)?;
    let poset = enumerate_stau(&alg, caps.options())?;
    let document = EnumerationDocument::new(&poset, input_digest(&[algebra_text]));
    let json = document.to_json();
    let dot = report::poset_dot(&poset);
    let summary = report::poset_summary(&poset);
    Ok(EnumerateOutput {
        summary,
        document,
        json,
        dot,
    })
}

/// Summand words of a module, e.g. `3` or `(2/3)(3)`; `0` for the zero module.
pub fn describe_module(m: &Representation) -> Result<String, CliError> {
    let mut labeler = Labeler::new();
    let mut parts = Vec::new();
    for (s, mult) in decompose(m)? {
        let l = labeler.label(&s)?;
        for _ in 0..mult {
            parts.push(l.clone());
        }
    }
    parts.sort();
    Ok(match parts.len() {
        0 => "0".to_string(),
        1 => parts.remove(0),
        _ => parts.iter().map(|p| format!("({p})")).collect(),
    })
}

pub fn load(
    algebra_text: &str,
    module_text: &str,
    field: Option<u32>,
) -> Result<(Arc<BoundQuiverAlgebra>, Representation), CliError> {
    let alg = format::parse_algebra(algebra_text, field)?;
    let m = format::parse_module(&alg, module_text)?;
    Ok((alg, m))
}

/// τM as its summand words followed by its dimension vector.
pub fn cmd_tau(algebra_text: &str, module_text: &str, field: Option<u32>) -> Result<String, CliError> {
    let (_, m) = load(algebra_text, module_text, field)?;
    let t = tau(&m)?.module;
    let dims: Vec<String> = t.dims().iter().map(|d| d.to_string()).collect();
    Ok(format!("{}\ndim: {}\n", describe_module(&t)?, dims.join(" ")))
}

/// The algebra file of the one-point extension.
pub fn cmd_extend(
    algebra_text: &str,
    module_text: &str,
    field: Option<u32>,
    vertex_name: &str,
) -> Result<String, CliError> {
    let (alg, m) = load(algebra_text, module_text, field)?;
    let ext = extend(&alg, &m, vertex_name)?;
    Ok(format::emit_algebra(&ext.algebra))
}

pub struct VerifyOutput {
    pub passed: bool,
    pub table: String,
    pub document: VerificationDocument,
    pub json: String,
}

pub fn cmd_verify(
    algebra_text: &str,
    module_text: &str,
    field: Option<u32>,
    vertex_name: &str,
    caps: Caps,
) -> Result<VerifyOutput, CliError> {
    let (alg, m) = load(algebra_text, module_text, field)?;
    let r = verify_extension_theorems(&alg, &m, vertex_name, caps.options())?;
    let document = VerificationDocument::new(&r, input_digest(&[algebra_text, module_text]));
    Ok(VerifyOutput {
        passed: r.all_passed(),
        table: report::verification_table(&r),
        json: document.to_json(),
        document,
    })
}
