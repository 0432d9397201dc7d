//! Deterministic JSON reports.
//!
//! Reports are byte-identical across runs for a fixed input and seed: keys
//! come out sorted, every number is an exact integer, and wall-clock timing
//! stays on the human-readable channel.

use serde::Serialize;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::mond::MondReport;
use crate::stdbasis::HilbertSamuelData;

#[derive(Debug, Serialize)]
pub struct ReportJson {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub input_sha256: String,
    pub seed: u64,
    pub result: Value,
    pub warnings: Vec<String>,
}

pub fn input_hash(text: &str) -> String {
    let mut h = Sha256::new();
    h.update(text.as_bytes());
    let digest = h.finalize();
    let mut out = String::with_capacity(64);
    for b in digest {
        out.push_str(&format!("{:02x}", b));
    }
    out
}

pub fn assemble(
    command: &str,
    input_text: &str,
    seed: u64,
    result: Value,
    warnings: Vec<String>,
) -> ReportJson {
    ReportJson {
        tool: "germlab",
        version: env!("CARGO_PKG_VERSION"),
        command: command.to_string(),
        input_sha256: input_hash(input_text),
        seed,
        result,
        warnings,
    }
}

impl ReportJson {
    pub fn to_string_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn mond_result_value(rep: &MondReport) -> Value {
    let mut m = Map::new();
    m.insert("n".into(), json!(rep.n));
    m.insert("k".into(), json!(rep.k));
    m.insert("g".into(), json!(rep.g.to_string()));
    m.insert("ghat".into(), json!(rep.ghat.to_string()));
    m.insert("dim_mg".into(), json!(rep.dim_mg));
    m.insert("dim_kg".into(), json!(rep.dim_kg));
    m.insert("codim_ae".into(), json!(rep.codim_ae));
    m.insert(
        "mu_image".into(),
        match rep.mu_image {
            Some(v) => json!(v),
            None => Value::Null,
        },
    );
    m.insert("weighted_homogeneous".into(), json!(rep.weighted_homogeneous));
    if let Some((w, d)) = &rep.weights {
        m.insert("weights".into(), json!(w));
        m.insert("weighted_degree".into(), json!(d));
    }
    if let Some(c) = &rep.cm_certificate {
        m.insert(
            "cm_certificate".into(),
            json!({
                "multiplicity": c.multiplicity,
                "dim_mg": c.dim_mg,
                "passes": c.passes,
            }),
        );
    }
    m.insert("verdict".into(), json!(rep.verdict.to_string()));
    Value::Object(m)
}

pub fn hilbert_result_value(h: &HilbertSamuelData) -> Value {
    json!({
        "values": h.values.iter().map(|&(t, v)| json!([t, v])).collect::<Vec<_>>(),
        "fitted": h.fitted.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "stable_from": h.stable_from,
        "dimension": h.dimension,
        "multiplicity": h.multiplicity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hash_is_stable() {
        assert_eq!(input_hash("abc").len(), 64);
        assert_eq!(input_hash("abc"), input_hash("abc"));
        assert_ne!(input_hash("abc"), input_hash("abd"));
    }

    #[test]
    fn serialization_is_deterministic() {
        let r1 = assemble("dim", "ring x;\n", 7, json!({"dim": 3}), vec![]);
        let r2 = assemble("dim", "ring x;\n", 7, json!({"dim": 3}), vec![]);
        assert_eq!(r1.to_string_pretty(), r2.to_string_pretty());
    }
}
