//! JSON and text rendering of command results.
//!
//! JSON output is a deterministic byte stream for a fixed input and flag
//! set: struct fields serialize in declaration order, weight keys ascend
//! numerically, and all numbers are decimal integers. Timings appear only
//! under `--timing` and carry no determinism guarantee.

use mincode::code::WeightDistribution;
use mincode::minimality::{MinimalityVerdict, WalshInequality, Witness};
use mincode::ternary::GmkCertificate;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Serialize)]
pub struct WeightsReport {
    pub q: u16,
    pub n: usize,
    pub k: usize,
    pub weights: BTreeMap<usize, u64>,
    pub wmin: usize,
    pub wmax: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl WeightsReport {
    pub fn render_text(&self) -> String {
        let mut out = format!("q {}\nn {}\nk {}\nwmin {}\nwmax {}\n", self.q, self.n, self.k, self.wmin, self.wmax);
        for (w, c) in &self.weights {
            out.push_str(&format!("{w} {c}\n"));
        }
        if let Some(ms) = self.timing_ms {
            out.push_str(&format!("timing_ms {ms}\n"));
        }
        out
    }
}

#[derive(Serialize)]
pub struct CoverWitnessJson {
    pub a_index: u64,
    pub b_index: u64,
    pub a_weight: usize,
    pub b_weight: usize,
}

#[derive(Serialize)]
pub struct WalshViolationJson {
    pub w1: usize,
    pub w2: usize,
    pub w3: usize,
    pub inequality: &'static str,
}

#[derive(Serialize)]
pub struct CheckReport {
    pub q: u16,
    pub n: usize,
    pub k: usize,
    pub method: &'static str,
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wmin: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wmax: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ab_satisfied: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<CoverWitnessJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub walsh_violation: Option<WalshViolationJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl CheckReport {
    pub fn from_verdict(q: u16, n: usize, k: usize, verdict: &MinimalityVerdict) -> Self {
        let mut report = Self {
            q,
            n,
            k,
            method: verdict.method.name(),
            verdict: verdict.outcome.name(),
            wmin: None,
            wmax: None,
            ab_satisfied: None,
            witness: None,
            walsh_violation: None,
            timing_ms: None,
        };
        match &verdict.witness {
            Some(Witness::Cover(w)) => {
                report.witness = Some(CoverWitnessJson {
                    a_index: w.a_index,
                    b_index: w.b_index,
                    a_weight: w.a.weight(),
                    b_weight: w.b.weight(),
                });
            }
            Some(Witness::Walsh(w)) => {
                report.walsh_violation = Some(WalshViolationJson {
                    w1: w.w1,
                    w2: w.w2,
                    w3: w.w3,
                    inequality: match w.inequality {
                        WalshInequality::Asymmetric => "asymmetric",
                        WalshInequality::Symmetric => "symmetric",
                    },
                });
            }
            None => {}
        }
        report
    }

    pub fn with_extremes(mut self, dist: &WeightDistribution) -> Self {
        self.wmin = dist.w_min();
        self.wmax = dist.w_max();
        self
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "q {}\nn {}\nk {}\nmethod {}\nverdict {}\n",
            self.q, self.n, self.k, self.method, self.verdict
        );
        if let (Some(wmin), Some(wmax)) = (self.wmin, self.wmax) {
            out.push_str(&format!("wmin {wmin}\nwmax {wmax}\n"));
        }
        if let Some(ab) = self.ab_satisfied {
            out.push_str(&format!("ab_satisfied {ab}\n"));
        }
        if let Some(w) = &self.witness {
            out.push_str(&format!(
                "witness a_index={} b_index={} wt_a={} wt_b={}\n",
                w.a_index, w.b_index, w.a_weight, w.b_weight
            ));
        }
        if let Some(v) = &self.walsh_violation {
            out.push_str(&format!(
                "walsh_violation w1={} w2={} w3={} inequality={}\n",
                v.w1, v.w2, v.w3, v.inequality
            ));
        }
        if let Some(ms) = self.timing_ms {
            out.push_str(&format!("timing_ms {ms}\n"));
        }
        out
    }
}

#[derive(Serialize)]
pub struct ConstructReport {
    pub q: u16,
    pub n: usize,
    pub k: usize,
    pub out: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl ConstructReport {
    pub fn render_text(&self) -> String {
        let mut out = format!("q {}\nn {}\nk {}\nwrote {}\n", self.q, self.n, self.k, self.out);
        if let Some(ms) = self.timing_ms {
            out.push_str(&format!("timing_ms {ms}\n"));
        }
        out
    }
}

#[derive(Serialize)]
pub struct CertifyReport {
    pub m: usize,
    pub k: usize,
    pub q: u16,
    pub n: u64,
    pub dim: usize,
    pub d: u64,
    pub wmin: u64,
    pub wmax: u64,
    pub ab_satisfied: bool,
    pub ratio_le_two_thirds: bool,
    pub zero_triple_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl CertifyReport {
    pub fn from_certificate(c: &GmkCertificate) -> Self {
        Self {
            m: c.m,
            k: c.k,
            q: 3,
            n: c.n,
            dim: c.dim,
            d: c.d,
            wmin: c.w_min,
            wmax: c.w_max,
            ab_satisfied: c.ab_satisfied,
            ratio_le_two_thirds: c.ratio_le_two_thirds,
            zero_triple_ok: c.zero_triple_ok,
            timing_ms: None,
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "m {}\nk {}\nq {}\nn {}\ndim {}\nd {}\nwmin {}\nwmax {}\nab_satisfied {}\nratio_le_two_thirds {}\nzero_triple_ok {}\n",
            self.m,
            self.k,
            self.q,
            self.n,
            self.dim,
            self.d,
            self.wmin,
            self.wmax,
            self.ab_satisfied,
            self.ratio_le_two_thirds,
            self.zero_triple_ok
        );
        if let Some(ms) = self.timing_ms {
            out.push_str(&format!("timing_ms {ms}\n"));
        }
        out
    }
}

#[derive(Serialize)]
pub struct ValueReport {
    pub q: u64,
    pub m: u32,
    pub kind: &'static str,
    pub degree: u32,
    pub x: u32,
    pub value: i128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}
