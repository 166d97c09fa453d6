//! Machine-readable output: RFC 4180 CSV and the JSON schemas for series,
//! verification reports, and convergence tables.

use excludant_core::bijection::BijectionReport;
use excludant_core::identities::VerificationReport;
use excludant_core::partitions::{ColoredPart, ColoredPartition};
use excludant_core::qseries::TruncatedSeries;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// CSV with CRLF record separators and minimal quoting, per RFC 4180.
pub fn csv_rows<I>(header: &[&str], rows: I) -> String
where
    I: Iterator<Item = Vec<String>>,
{
    let mut out = String::new();
    out.push_str(&header.iter().map(|h| quote(h)).collect::<Vec<_>>().join(","));
    out.push_str("\r\n");
    for row in rows {
        out.push_str(&row.iter().map(|f| quote(f)).collect::<Vec<_>>().join(","));
        out.push_str("\r\n");
    }
    out
}

fn quote(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// Serialized form of a truncated series: coefficients as decimal strings,
/// which survive coefficients beyond 64-bit range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub order: usize,
    pub coeffs: Vec<String>,
}

impl SeriesJson {
    pub fn of(series: &TruncatedSeries) -> Self {
        Self {
            order: series.order(),
            coeffs: series.coeffs().iter().map(|c| c.to_string()).collect(),
        }
    }

    pub fn to_series(&self) -> Result<TruncatedSeries, String> {
        if self.coeffs.len() != self.order + 1 {
            return Err(format!(
                "order {} needs {} coefficients, got {}",
                self.order,
                self.order + 1,
                self.coeffs.len()
            ));
        }
        let mut s = TruncatedSeries::zero(self.order);
        for (n, c) in self.coeffs.iter().enumerate() {
            let v: BigInt = c.parse().map_err(|e| format!("coefficient {n}: {e}"))?;
            s.set_coeff(n, v);
        }
        Ok(s)
    }
}

pub fn series_to_json(series: &TruncatedSeries) -> String {
    serde_json::to_string(&SeriesJson::of(series)).expect("serializable")
}

pub fn series_from_json(json: &str) -> Result<TruncatedSeries, String> {
    let parsed: SeriesJson = serde_json::from_str(json).map_err(|e| e.to_string())?;
    parsed.to_series()
}

#[derive(Debug, Serialize)]
struct SequenceJson<'a> {
    stat: &'a str,
    engine: &'a str,
    order: usize,
    coeffs: Vec<String>,
}

pub fn sequence_json(stat: &str, engine: &str, values: &[BigInt]) -> String {
    let doc = SequenceJson {
        stat,
        engine,
        order: values.len().saturating_sub(1),
        coeffs: values.iter().map(|v| v.to_string()).collect(),
    };
    let mut s = serde_json::to_string(&doc).expect("serializable");
    s.push('\n');
    s
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MismatchJson {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w_power: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub enumeration: Option<String>,
    pub definitional: String,
    pub closed_form: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ReportJson {
    pub theorem: String,
    pub order: usize,
    pub n_enum: u32,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<MismatchJson>,
}

impl ReportJson {
    pub fn of(report: &VerificationReport) -> Self {
        Self {
            theorem: report.theorem.name().to_string(),
            order: report.order,
            n_enum: report.n_enum,
            status: if report.pass { "pass".into() } else { "fail".into() },
            mismatch: report.mismatch.as_ref().map(|m| MismatchJson {
                n: m.n,
                w_power: m.w_power,
                enumeration: m.enumeration.as_ref().map(|v| v.to_string()),
                definitional: m.definitional.to_string(),
                closed_form: m.closed_form.to_string(),
            }),
        }
    }
}

pub fn reports_json(reports: &[VerificationReport]) -> String {
    let docs: Vec<ReportJson> = reports.iter().map(ReportJson::of).collect();
    let mut s = serde_json::to_string_pretty(&docs).expect("serializable");
    s.push('\n');
    s
}

#[derive(Debug, Serialize)]
struct BijectionJson<'a> {
    n: u32,
    domain_size: usize,
    image_size: usize,
    status: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    failure: Option<&'a str>,
}

pub fn bijection_report_json(report: &BijectionReport) -> String {
    let doc = BijectionJson {
        n: report.n,
        domain_size: report.domain_size,
        image_size: report.image_size,
        status: if report.pass { "pass" } else { "fail" },
        failure: report.failure.as_deref(),
    };
    let mut s = serde_json::to_string(&doc).expect("serializable");
    s.push('\n');
    s
}

#[derive(Debug, Serialize)]
struct ColoredPartJson {
    value: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    color: Option<u8>,
}

pub fn colored_json(cp: &ColoredPartition) -> String {
    let parts: Vec<ColoredPartJson> = cp
        .parts()
        .iter()
        .map(|&ColoredPart { value, color }| ColoredPartJson { value, color })
        .collect();
    let mut s = serde_json::to_string(&parts).expect("serializable");
    s.push('\n');
    s
}

#[derive(Debug, Serialize)]
struct ConvergenceRowJson<'a> {
    n: &'a str,
    exact: &'a str,
    predicted: &'a str,
    ratio: &'a str,
}

pub fn convergence_json(stat: &str, rows: &[Vec<String>]) -> String {
    #[derive(Serialize)]
    struct Doc<'a> {
        stat: &'a str,
        points: Vec<ConvergenceRowJson<'a>>,
    }
    let doc = Doc {
        stat,
        points: rows
            .iter()
            .map(|r| ConvergenceRowJson { n: &r[0], exact: &r[1], predicted: &r[2], ratio: &r[3] })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}
