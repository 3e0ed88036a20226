use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};

use lsa_forge::io::{self, AlgebraFile, Params, Structure};

use crate::Failure;

pub const MAX_DIM_VAR: &str = "LSA_FORGE_MAX_DIM";
const DEFAULT_MAX_DIM: usize = 16;

pub fn max_dim() -> Result<usize, Failure> {
    match std::env::var(MAX_DIM_VAR) {
        Err(_) => Ok(DEFAULT_MAX_DIM),
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{MAX_DIM_VAR}: `{v}` is not a nonnegative integer"))),
    }
}

pub fn parse_params(raw: &[String]) -> Result<Params, Failure> {
    let mut out = Params::new();
    for kv in raw {
        let (k, v) = io::parse_param(kv).map_err(|e| Failure::Usage(format!("--param: {e}")))?;
        if out.insert(k.clone(), v).is_some() {
            return Err(Failure::Usage(format!("--param: `{k}` given twice")));
        }
    }
    Ok(out)
}

/// Every input file of a job, parsed and checked against the dimension cap
/// before anything runs. Parameters must each be used by some input.
pub struct Inputs {
    params: Params,
    files: BTreeMap<PathBuf, AlgebraFile>,
}

impl Inputs {
    pub fn load(paths: &[&Path], params: Params) -> Result<Inputs, Failure> {
        let cap = max_dim()?;
        let mut files = BTreeMap::new();
        let mut used = BTreeSet::new();
        for path in paths {
            let shown = path.display();
            let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{shown}: {e}")))?;
            let file: AlgebraFile = serde_json::from_str(&text)
                .map_err(|e| Failure::Usage(format!("{shown}: line {}, column {}: {e}", e.line(), e.column())))?;
            if file.dim > cap {
                return Err(Failure::Usage(format!("{shown}: dim {} exceeds {MAX_DIM_VAR} = {cap}", file.dim)));
            }
            used.extend(io::placeholders(&file));
            files.insert(path.to_path_buf(), file);
        }
        if let Some(k) = params.keys().find(|k| !used.contains(*k)) {
            return Err(Failure::Usage(format!("--param: no input uses `{k}`")));
        }
        Ok(Inputs { params, files })
    }

    pub fn structure(&self, path: &Path) -> Result<Structure, Failure> {
        let file = self.files.get(path).expect("inputs are loaded before dispatch");
        io::from_file(file, &self.params).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
    }
}
