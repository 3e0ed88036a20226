use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use lsa_forge::io::{self, Params, Structure};
use lsa_forge::{Certificate, Report};
use serde_json::{json, Map, Value};

use crate::Failure;

/// Run metadata, printed apart from the report body. Nothing in it depends
/// on the time or the machine, so identical jobs give identical bytes.
pub struct Header {
    pub command: String,
    pub inputs: Vec<String>,
    pub params: Params,
    pub seed: u64,
}

/// What a job produced: certificates in a fixed order, named facts such as
/// a recognised family, and possibly a structure for `--out`.
#[derive(Default)]
pub struct Outcome {
    pub facts: Vec<(String, String)>,
    pub certs: Vec<Certificate>,
    pub structure: Option<Structure>,
}

impl Outcome {
    pub fn fact(&mut self, key: &str, value: impl ToString) {
        self.facts.push((key.to_string(), value.to_string()));
    }

    pub fn cert(&mut self, c: Certificate) {
        self.certs.push(c);
    }

    pub fn passed(&self) -> bool {
        self.certs.iter().all(|c| c.passed)
    }

    /// Outcome of a builder whose precondition failed.
    pub fn rejected(r: Report) -> Outcome {
        let mut o = Outcome::default();
        o.cert(Certificate::new("preconditions", vec![r]));
        o
    }
}

pub fn text(h: &Header, o: &Outcome) -> String {
    let mut s = String::new();
    writeln!(s, "# lsa-forge {}", env!("CARGO_PKG_VERSION")).unwrap();
    writeln!(s, "# command: {}", h.command).unwrap();
    if !h.inputs.is_empty() {
        writeln!(s, "# inputs: {}", h.inputs.join(", ")).unwrap();
    }
    if !h.params.is_empty() {
        let ps: Vec<String> = h.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(s, "# params: {}", ps.join(", ")).unwrap();
    }
    writeln!(s, "# seed: {}", h.seed).unwrap();
    for (k, v) in &o.facts {
        writeln!(s, "{k}: {v}").unwrap();
    }
    for c in &o.certs {
        write!(s, "{c}").unwrap();
    }
    writeln!(s, "verdict: {}", if o.passed() { "pass" } else { "fail" }).unwrap();
    s
}

pub fn json(h: &Header, o: &Outcome) -> String {
    let params: Map<String, Value> = h.params.iter().map(|(k, v)| (k.clone(), Value::String(v.to_string()))).collect();
    let facts: Vec<Value> = o.facts.iter().map(|(k, v)| json!([k, v])).collect();
    let doc = json!({
        "header": {
            "tool": "lsa-forge",
            "version": env!("CARGO_PKG_VERSION"),
            "command": h.command,
            "inputs": h.inputs,
            "params": params,
            "seed": h.seed,
        },
        "facts": facts,
        "certificates": o.certs,
        "passed": o.passed(),
    });
    let mut out = serde_json::to_string_pretty(&doc).expect("serializable");
    out.push('\n');
    out
}

/// Serializes `s` and parses it back; the parsed copy must equal `s` and is
/// what callers re-verify before anything is written.
pub fn round_trip(s: &Structure) -> Result<Structure, Failure> {
    let back = io::parse_structure(&io::to_json(s), &Params::new())
        .map_err(|e| Failure::Internal(format!("output does not parse back: {e}")))?;
    if &back != s {
        return Err(Failure::Internal("output changes under a write/read round trip".into()));
    }
    Ok(back)
}

pub fn write_structure(path: &Path, s: &Structure) -> Result<(), Failure> {
    fs::write(path, io::to_json(s)).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}
