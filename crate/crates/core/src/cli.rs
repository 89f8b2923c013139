//! Subcommand implementations behind the `z2z4` binary.
//!
//! Each command returns a [`CmdOutput`] carrying a plain-text report, the
//! same fields as JSON, and the process exit code.

use std::fs;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use crate::code::{parse_code, Blocks, CodeType, Z2Z4Code};
use crate::decode::{self, format_pd_set, parse_pd_set, verify_pd_set, Method, PdSet, PdVerdict};
use crate::encode::encode;
use crate::error::{Error, Result};
use crate::perm::{generate_group, parse_permutation_list, Permutation, DEFAULT_GROUP_CAP};
use crate::presets;
use crate::sim::{simulate, ErrorModel};
use crate::vector::{BinaryVector, CoordSet, MixedVector};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CONFIG: i32 = 3;

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Config(_) | Error::NotAutomorphism(_) => EXIT_CONFIG,
        _ => EXIT_USAGE,
    }
}

#[derive(Debug, Clone)]
pub struct CmdOutput {
    pub text: String,
    pub json: Value,
    pub exit: i32,
}

impl CmdOutput {
    fn ok(text: String, json: Value) -> Self {
        CmdOutput { text, json, exit: EXIT_OK }
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            serde_json::to_string_pretty(&self.json).expect("serialisable report")
        } else {
            self.text.clone()
        }
    }
}

fn read_file(path: &str) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("cannot read {}: {}", path, e)))
}

/// A built-in code name or a path to a code file.
pub fn load_code(source: &str) -> Result<Z2Z4Code> {
    if let Some(code) = presets::code_by_name(source) {
        return Ok(code);
    }
    if !Path::new(source).exists() {
        return Err(Error::InvalidArgument(format!(
            "{:?} is neither a file nor a built-in code ({})",
            source,
            presets::CODE_NAMES.join(", ")
        )));
    }
    parse_code(&read_file(source)?)
}

/// A built-in PD-set name or a path to a PD-set file.
pub fn load_pd_set(source: &str, n: usize) -> Result<PdSet> {
    if !Path::new(source).exists() {
        return presets::pd_set_by_name(source);
    }
    parse_pd_set(&read_file(source)?, n)
}

#[derive(Debug, Clone, Serialize)]
pub struct InfoReport {
    pub code_type: String,
    pub dual_type: String,
    pub info_set: CoordSet,
    pub standard_info_set: CoordSet,
    pub min_distance: usize,
    pub t: usize,
    pub binary_linear: bool,
    pub size: u128,
}

pub fn info_report(code: &Z2Z4Code) -> Result<InfoReport> {
    let ct = code.code_type();
    Ok(InfoReport {
        code_type: ct.to_string(),
        dual_type: ct.dual().to_string(),
        info_set: code.info_set(),
        standard_info_set: code.standard_info_set(),
        min_distance: code.min_distance()?,
        t: code.error_capability()?,
        binary_linear: code.is_binary_linear(),
        size: code.size(),
    })
}

pub fn cmd_info(code: &Z2Z4Code) -> Result<CmdOutput> {
    let r = info_report(code)?;
    let text = format!(
        "type            {}\n\
         dual type       {}\n\
         info set J      {}\n\
         J (std form)    {}\n\
         d               {}\n\
         t               {}\n\
         binary linear   {}\n\
         size            {}",
        r.code_type,
        r.dual_type,
        r.info_set,
        r.standard_info_set,
        r.min_distance,
        r.t,
        if r.binary_linear { "yes" } else { "no" },
        r.size
    );
    Ok(CmdOutput::ok(text, serde_json::to_value(&r).expect("report")))
}

pub fn cmd_standard_form(code: &Z2Z4Code) -> Result<CmdOutput> {
    let sf = code.standard_form();
    let ct: CodeType = sf.code_type();
    let mut text = format!("type {}\ncol_perm {}\n", ct, sf.col_perm());
    text.push_str(&sf.to_string());
    let blocks: Blocks<'_> = sf.blocks();
    let rows: Vec<String> = sf.rows().iter().map(MixedVector::to_string).collect();
    let json = json!({
        "code_type": ct.to_string(),
        "col_perm": sf.col_perm().to_string(),
        "rows": rows,
        "blocks": blocks,
    });
    Ok(CmdOutput::ok(text.trim_end().to_string(), json))
}

pub fn cmd_dual(code: &Z2Z4Code) -> Result<CmdOutput> {
    let rows: Vec<String> = code.parity_rows().iter().map(MixedVector::to_string).collect();
    let dual = code.code_type().dual();
    let text = format!("dual type {}\n{}", dual, rows.join("\n"));
    Ok(CmdOutput::ok(text, json!({ "dual_type": dual.to_string(), "rows": rows })))
}

pub fn cmd_encode(code: &Z2Z4Code, info: &str) -> Result<CmdOutput> {
    let a: BinaryVector = info.parse()?;
    let x = encode(&a, code)?;
    Ok(CmdOutput::ok(x.to_string(), json!({ "info": a, "codeword": x })))
}

pub fn cmd_decode(code: &Z2Z4Code, set: &PdSet, received: &str, method: Method, trust: bool) -> Result<CmdOutput> {
    let y: BinaryVector = received.parse()?;
    if !trust {
        if let PdVerdict::Failed { witness } = verify_pd_set(set) {
            return Err(Error::Config(format!(
                "PD-set is not certified, uncovered error {} (use --trust to skip)",
                witness
            )));
        }
    }
    let outcome = decode::decode(code, set, &y, method)?;
    let exit = if outcome.is_failure() { EXIT_FAIL } else { EXIT_OK };
    let mut json = serde_json::to_value(&outcome).expect("outcome");
    json["method"] = serde_json::to_value(method).expect("method");
    json["received"] = json!(y);
    Ok(CmdOutput { text: outcome.to_string(), json, exit })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PdAction {
    Verify,
    Search,
}

/// Certifies or searches a PD-set. `perms_text` is a PD-set file or a plain
/// permutation list; the info set is always the code's. The radius is taken
/// from `t`, then from the file header, then from the code.
pub fn cmd_pdset(
    code: &Z2Z4Code,
    perms_text: &str,
    action: PdAction,
    t: Option<usize>,
    closure: bool,
) -> Result<CmdOutput> {
    let n = code.length();
    let (mut perms, header_t) = match parse_pd_set(perms_text, n) {
        Ok(set) => (set.perms().to_vec(), Some(set.radius())),
        Err(_) => (parse_permutation_list(perms_text, n)?, None),
    };
    if closure {
        perms = generate_group(&perms, n, DEFAULT_GROUP_CAP)?;
    }
    let t = match t.or(header_t) {
        Some(t) => t,
        None => code.error_capability()?,
    };
    let info = code.info_set();
    for p in &perms {
        if !crate::perm::is_automorphism(p, code)? {
            return Err(Error::NotAutomorphism(p.to_string()));
        }
    }
    match action {
        PdAction::Verify => {
            let set = PdSet::new(perms, info, t)?;
            let verdict = verify_pd_set(&set);
            let (text, exit) = match &verdict {
                PdVerdict::Certified { patterns } => (
                    format!(
                        "PASS: {} permutations cover all {} error patterns of weight <= {}",
                        set.len(),
                        patterns,
                        t
                    ),
                    EXIT_OK,
                ),
                PdVerdict::Failed { witness } => {
                    (format!("FAIL: error {} cannot be moved off {}", witness, set.info_set()), EXIT_FAIL)
                }
            };
            let mut json = serde_json::to_value(&verdict).expect("verdict");
            json["size"] = json!(set.len());
            json["t"] = json!(t);
            json["info_set"] = json!(set.info_set());
            Ok(CmdOutput { text, json, exit })
        }
        PdAction::Search => match decode::search_pd_set(code, &perms, &info, t)? {
            Some(set) => {
                let text = format_pd_set(&set);
                let perms: Vec<String> = set.perms().iter().map(Permutation::to_string).collect();
                let json =
                    json!({ "found": true, "size": set.len(), "info_set": set.info_set(), "t": t, "perms": perms });
                Ok(CmdOutput::ok(text.trim_end().to_string(), json))
            }
            None => Ok(CmdOutput {
                text: format!("FAIL: candidates cannot cover every error of weight <= {}", t),
                json: json!({ "found": false, "t": t }),
                exit: EXIT_FAIL,
            }),
        },
    }
}

pub fn cmd_simulate(code: &Z2Z4Code, set: &PdSet, model: ErrorModel, trials: u64, seed: u64) -> Result<CmdOutput> {
    let report = simulate(code, set, model, trials, seed)?;
    Ok(CmdOutput::ok(report.to_string(), serde_json::to_value(&report).expect("report")))
}
