//! JSON structure files.
//!
//! A file holds one algebra by its nonzero products, plus optional named
//! forms, endomorphisms and 2-tensors. Entries are rational literals or
//! monomials in named parameters such as `-2*a*b^2` or `1/2*c^-1`; the
//! parameters are bound when the file is loaded.

use std::collections::{BTreeMap, BTreeSet};

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exact::{fmt_scalar, parse_scalar, Mat, Scalar};
use crate::forms::{Bilinear, FormKind};
use crate::smatrix::Tensor2;

pub type Params = BTreeMap<String, Scalar>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    pub basis: Vec<String>,
    pub product: Vec<ProductEntry>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub forms: BTreeMap<String, FormEntry>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub endos: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub tensors: BTreeMap<String, Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductEntry {
    pub left: String,
    pub right: String,
    pub result: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormEntry {
    pub kind: FileFormKind,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FileFormKind {
    Skew,
    Symmetric,
    None,
}

impl From<FormKind> for FileFormKind {
    fn from(k: FormKind) -> Self {
        match k {
            FormKind::Skew => FileFormKind::Skew,
            FormKind::Symmetric => FileFormKind::Symmetric,
            FormKind::None => FileFormKind::None,
        }
    }
}

impl From<FileFormKind> for FormKind {
    fn from(k: FileFormKind) -> Self {
        match k {
            FileFormKind::Skew => FormKind::Skew,
            FileFormKind::Symmetric => FormKind::Symmetric,
            FileFormKind::None => FormKind::None,
        }
    }
}

/// A loaded structure file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Structure {
    pub alg: Algebra,
    pub forms: BTreeMap<String, Bilinear>,
    pub endos: BTreeMap<String, Mat>,
    pub tensors: BTreeMap<String, Tensor2>,
}

impl Structure {
    pub fn new(alg: Algebra) -> Self {
        Structure { alg, forms: BTreeMap::new(), endos: BTreeMap::new(), tensors: BTreeMap::new() }
    }

    pub fn with_form(mut self, name: &str, f: Bilinear) -> Self {
        self.forms.insert(name.to_string(), f);
        self
    }

    pub fn with_endo(mut self, name: &str, e: Mat) -> Self {
        self.endos.insert(name.to_string(), e);
        self
    }

    pub fn with_tensor(mut self, name: &str, t: Tensor2) -> Self {
        self.tensors.insert(name.to_string(), t);
        self
    }

    pub fn form(&self, name: &str) -> Result<&Bilinear> {
        self.forms.get(name).ok_or_else(|| Error::Input(format!("forms: no form named `{name}`")))
    }

    pub fn endo(&self, name: &str) -> Result<&Mat> {
        self.endos.get(name).ok_or_else(|| Error::Input(format!("endos: no endomorphism named `{name}`")))
    }

    pub fn tensor(&self, name: &str) -> Result<&Tensor2> {
        self.tensors.get(name).ok_or_else(|| Error::Input(format!("tensors: no tensor named `{name}`")))
    }
}

/// Evaluates a rational literal or a monomial `c*x*y^k` in bound parameters.
pub fn eval_entry(s: &str, params: &Params) -> Result<Scalar> {
    let t = s.trim();
    if let Ok(x) = parse_scalar(t) {
        return Ok(x);
    }
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    if body.is_empty() {
        return Err(Error::Parse(s.to_string()));
    }
    let mut acc = Scalar::one();
    for factor in body.split('*') {
        let f = factor.trim();
        if f.starts_with(|c: char| c.is_ascii_digit()) {
            acc *= parse_scalar(f)?;
            continue;
        }
        let (name, exp) = match f.split_once('^') {
            Some((n, e)) => (n, e.parse::<i32>().map_err(|_| Error::Parse(s.to_string()))?),
            None => (f, 1),
        };
        if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
            return Err(Error::Parse(s.to_string()));
        }
        let v = params
            .get(name)
            .ok_or_else(|| Error::Input(format!("unbound parameter `{name}` in `{s}`")))?;
        if exp < 0 && v.is_zero() {
            return Err(Error::Input(format!("parameter `{name}` must be nonzero in `{s}`")));
        }
        acc *= num::pow::Pow::pow(v, exp);
    }
    Ok(if neg { -acc } else { acc })
}

fn at(field: &str, e: Error) -> Error {
    Error::Input(format!("{field}: {e}"))
}

fn matrix(field: &str, rows: &[Vec<String>], n: usize, params: &Params) -> Result<Mat> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Input(format!("{field}: expected a {n}x{n} matrix")));
    }
    let mut m = Mat::zeros(n, n);
    for (i, row) in rows.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            m[(i, j)] = eval_entry(e, params).map_err(|err| at(&format!("{field}[{i}][{j}]"), err))?;
        }
    }
    Ok(m)
}

/// Parses and validates a structure file, binding placeholders to `params`.
pub fn parse_structure(text: &str, params: &Params) -> Result<Structure> {
    let file: AlgebraFile = serde_json::from_str(text)
        .map_err(|e| Error::Input(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    from_file(&file, params)
}

pub fn from_file(file: &AlgebraFile, params: &Params) -> Result<Structure> {
    let n = file.dim;
    if file.basis.len() != n {
        return Err(Error::Input(format!("basis: {} labels for dim {n}", file.basis.len())));
    }
    let mut index = BTreeMap::new();
    for (i, l) in file.basis.iter().enumerate() {
        if index.insert(l.as_str(), i).is_some() {
            return Err(Error::Input(format!("basis[{i}]: duplicate label `{l}`")));
        }
    }
    let lookup = |field: String, l: &str| -> Result<usize> {
        index.get(l).copied().ok_or_else(|| Error::Input(format!("{field}: unknown basis label `{l}`")))
    };
    let mut entries = Vec::new();
    let mut seen = BTreeSet::new();
    for (p, e) in file.product.iter().enumerate() {
        let i = lookup(format!("product[{p}].left"), &e.left)?;
        let j = lookup(format!("product[{p}].right"), &e.right)?;
        if !seen.insert((i, j)) {
            return Err(Error::Input(format!("product[{p}]: duplicate entry for ({}, {})", e.left, e.right)));
        }
        for (l, v) in &e.result {
            let k = lookup(format!("product[{p}].result"), l)?;
            let x = eval_entry(v, params).map_err(|err| at(&format!("product[{p}].result.{l}"), err))?;
            entries.push((i, j, k, x));
        }
    }
    let alg = Algebra::from_entries(n, &entries).with_labels(file.basis.clone())?;
    let mut s = Structure::new(alg);
    for (name, f) in &file.forms {
        let field = format!("forms.{name}");
        let g = matrix(&field, &f.matrix, n, params)?;
        let b = Bilinear::new(g, f.kind.into()).map_err(|e| at(&field, e))?;
        s.forms.insert(name.clone(), b);
    }
    for (name, rows) in &file.endos {
        s.endos.insert(name.clone(), matrix(&format!("endos.{name}"), rows, n, params)?);
    }
    for (name, rows) in &file.tensors {
        let m = matrix(&format!("tensors.{name}"), rows, n, params)?;
        s.tensors.insert(name.clone(), Tensor2::new(m));
    }
    Ok(s)
}

fn mat_rows(m: &Mat) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(fmt_scalar).collect()).collect()
}

/// File representation with zero products omitted, in basis order.
pub fn to_file(s: &Structure) -> AlgebraFile {
    let a = &s.alg;
    let n = a.dim();
    let labels = a.labels();
    let mut product = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let result: BTreeMap<String, String> = a
                .prod(i, j)
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| (labels[k].clone(), fmt_scalar(x)))
                .collect();
            if !result.is_empty() {
                product.push(ProductEntry { left: labels[i].clone(), right: labels[j].clone(), result });
            }
        }
    }
    AlgebraFile {
        dim: n,
        basis: labels.to_vec(),
        product,
        forms: s
            .forms
            .iter()
            .map(|(k, f)| (k.clone(), FormEntry { kind: f.kind().into(), matrix: mat_rows(f.gram()) }))
            .collect(),
        endos: s.endos.iter().map(|(k, m)| (k.clone(), mat_rows(m))).collect(),
        tensors: s.tensors.iter().map(|(k, t)| (k.clone(), mat_rows(t.matrix()))).collect(),
    }
}

pub fn to_json(s: &Structure) -> String {
    let mut out = serde_json::to_string_pretty(&to_file(s)).expect("serializable");
    out.push('\n');
    out
}

/// Parses `k=v` parameter bindings.
pub fn parse_param(kv: &str) -> Result<(String, Scalar)> {
    let (k, v) = kv
        .split_once('=')
        .ok_or_else(|| Error::Input(format!("parameter `{kv}` is not of the form name=value")))?;
    let k = k.trim();
    if k.is_empty() {
        return Err(Error::Input(format!("parameter `{kv}` has an empty name")));
    }
    Ok((k.to_string(), parse_scalar(v.trim())?))
}

/// Parameter names the file's entries refer to.
pub fn placeholders(file: &AlgebraFile) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    let mut scan = |s: &str| {
        let body = s.trim().trim_start_matches('-');
        for f in body.split('*') {
            let name = f.split('^').next().unwrap_or("").trim();
            if name.starts_with(|c: char| c.is_alphabetic()) {
                out.insert(name.to_string());
            }
        }
    };
    for e in &file.product {
        e.result.values().for_each(|v| scan(v));
    }
    for f in file.forms.values() {
        f.matrix.iter().flatten().for_each(|v| scan(v));
    }
    for m in file.endos.values().chain(file.tensors.values()) {
        m.iter().flatten().for_each(|v| scan(v));
    }
    out
}
