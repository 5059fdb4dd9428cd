//! Per-semigroup verification records and rendering for the command line.
//!
//! CSV columns, in order:
//!
//! ```text
//! generators,m,e,c,c_prime,genus,type,wilf_num,wilf_den,thm1_num,thm1_den,wilf_ok,thm1_ok,type_ok,is_equality
//! ```
//!
//! `generators` is semicolon-joined. Rationals are always written as a
//! numerator/denominator pair in lowest terms with a positive denominator;
//! both fields are empty for the degenerate record of N. JSON output uses the
//! field names of [`VerificationRecord`] with rationals as two-element arrays.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::{self, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bounds;
use crate::enumeration::{
    empirical_f, min_quotient_trend, Check, QuotientWitness, Sweep, SweepSummary, TreeNode,
    TrendRow, Witness,
};
use crate::factorization::apery_factorization_set;
use crate::semigroup::NumericalSemigroup;
use crate::subset_bound::{LemmaInequality, Point};
use crate::Rational;

pub const CSV_HEADER: [&str; 15] = [
    "generators",
    "m",
    "e",
    "c",
    "c_prime",
    "genus",
    "type",
    "wilf_num",
    "wilf_den",
    "thm1_num",
    "thm1_den",
    "wilf_ok",
    "thm1_ok",
    "type_ok",
    "is_equality",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!(
                "unknown format `{other}` (expected json, csv or text)"
            )),
        }
    }
}

fn pair(r: Rational) -> [i64; 2] {
    [*r.numer(), *r.denom()]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub generators: Vec<u64>,
    pub m: u64,
    pub e: usize,
    pub c: u64,
    pub c_prime: u64,
    pub genus: usize,
    #[serde(rename = "type")]
    pub semigroup_type: usize,
    pub wilf_quotient: Option<[i64; 2]>,
    pub theorem1_bound: Option<[i64; 2]>,
    pub wilf_ok: bool,
    pub thm1_ok: bool,
    pub type_ok: bool,
    /// Apery bound `a <= c + m - 1` and the Apery formula for `c'` both hold.
    pub apery_ok: bool,
    pub lemma31_ok: bool,
    pub is_equality: bool,
    /// Set only for N, where quotients are undefined and every check is vacuous.
    pub degenerate: bool,
}

impl VerificationRecord {
    pub fn from_semigroup(s: &NumericalSemigroup) -> Self {
        let base = Self {
            generators: s.minimal_generators().to_vec(),
            m: s.multiplicity(),
            e: s.embedding_dimension(),
            c: s.conductor(),
            c_prime: s.c_prime(),
            genus: s.genus(),
            semigroup_type: 0,
            wilf_quotient: None,
            theorem1_bound: None,
            wilf_ok: true,
            thm1_ok: true,
            type_ok: true,
            apery_ok: true,
            lemma31_ok: true,
            is_equality: false,
            degenerate: true,
        };
        let Ok(eval) = bounds::evaluate(s) else {
            return base;
        };
        Self {
            semigroup_type: s.pseudo_frobenius().map(|t| t.semigroup_type).unwrap_or(0),
            wilf_quotient: Some(pair(eval.wilf_quotient)),
            theorem1_bound: Some(pair(eval.theorem1_bound)),
            wilf_ok: eval.wilf_holds,
            thm1_ok: eval.theorem1_holds,
            type_ok: eval.type_bound_holds,
            apery_ok: Check::AperyBound.passes(s) && Check::CPrimeCrosscheck.passes(s),
            lemma31_ok: Check::Lemma31.passes(s),
            is_equality: eval.is_wilf_equality,
            degenerate: false,
            ..base
        }
    }

    pub fn all_ok(&self) -> bool {
        self.wilf_ok && self.thm1_ok && self.type_ok && self.apery_ok && self.lemma31_ok
    }

    /// Recomputes the numeric flags from the stored integers.
    pub fn recheck(&self) -> Result<(), String> {
        self.numeric().recheck()
    }

    fn numeric(&self) -> NumericFields {
        NumericFields {
            m: self.m,
            e: self.e,
            c: self.c,
            c_prime: self.c_prime,
            semigroup_type: self.semigroup_type,
            wilf: self.wilf_quotient,
            thm1: self.theorem1_bound,
            wilf_ok: self.wilf_ok,
            thm1_ok: self.thm1_ok,
            type_ok: self.type_ok,
            is_equality: self.is_equality,
        }
    }

    pub fn to_csv_row(&self) -> CsvRow {
        CsvRow {
            generators: join_generators(&self.generators),
            m: self.m,
            e: self.e,
            c: self.c,
            c_prime: self.c_prime,
            genus: self.genus,
            semigroup_type: self.semigroup_type,
            wilf_num: self.wilf_quotient.map(|p| p[0]),
            wilf_den: self.wilf_quotient.map(|p| p[1]),
            thm1_num: self.theorem1_bound.map(|p| p[0]),
            thm1_den: self.theorem1_bound.map(|p| p[1]),
            wilf_ok: self.wilf_ok,
            thm1_ok: self.thm1_ok,
            type_ok: self.type_ok,
            is_equality: self.is_equality,
        }
    }

    pub fn to_text(&self) -> String {
        let frac = |p: Option<[i64; 2]>| match p {
            Some([n, 1]) => n.to_string(),
            Some([n, d]) => format!("{n}/{d}"),
            None => "-".into(),
        };
        let mut line = format!(
            "<{}> g={} m={} e={} c={} c'={} t={} wilf={} thm1={}",
            join_with(&self.generators, ","),
            self.genus,
            self.m,
            self.e,
            self.c,
            self.c_prime,
            self.semigroup_type,
            frac(self.wilf_quotient),
            frac(self.theorem1_bound),
        );
        if self.degenerate {
            line.push_str(" degenerate");
        } else {
            let failed: Vec<&str> = [
                (self.wilf_ok, "wilf"),
                (self.thm1_ok, "thm1"),
                (self.type_ok, "type"),
                (self.apery_ok, "apery"),
                (self.lemma31_ok, "lemma31"),
            ]
            .iter()
            .filter(|(ok, _)| !ok)
            .map(|(_, id)| *id)
            .collect();
            if failed.is_empty() {
                line.push_str(" ok");
            } else {
                let _ = write!(line, " FAIL[{}]", failed.join(","));
            }
            if self.is_equality {
                line.push_str(" equality");
            }
        }
        line
    }
}

/// One CSV line; see the module docs for the column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsvRow {
    pub generators: String,
    pub m: u64,
    pub e: usize,
    pub c: u64,
    pub c_prime: u64,
    pub genus: usize,
    #[serde(rename = "type")]
    pub semigroup_type: usize,
    pub wilf_num: Option<i64>,
    pub wilf_den: Option<i64>,
    pub thm1_num: Option<i64>,
    pub thm1_den: Option<i64>,
    pub wilf_ok: bool,
    pub thm1_ok: bool,
    pub type_ok: bool,
    pub is_equality: bool,
}

impl CsvRow {
    pub fn generators(&self) -> Result<Vec<u64>, String> {
        self.generators
            .split(';')
            .map(|g| {
                g.parse::<u64>()
                    .map_err(|e| format!("bad generator `{g}`: {e}"))
            })
            .collect()
    }

    pub fn recheck(&self) -> Result<(), String> {
        let join = |n: Option<i64>, d: Option<i64>| match (n, d) {
            (Some(n), Some(d)) => Ok(Some([n, d])),
            (None, None) => Ok(None),
            _ => Err("half-empty rational".to_string()),
        };
        NumericFields {
            m: self.m,
            e: self.e,
            c: self.c,
            c_prime: self.c_prime,
            semigroup_type: self.semigroup_type,
            wilf: join(self.wilf_num, self.wilf_den)?,
            thm1: join(self.thm1_num, self.thm1_den)?,
            wilf_ok: self.wilf_ok,
            thm1_ok: self.thm1_ok,
            type_ok: self.type_ok,
            is_equality: self.is_equality,
        }
        .recheck()
    }
}

struct NumericFields {
    m: u64,
    e: usize,
    c: u64,
    c_prime: u64,
    semigroup_type: usize,
    wilf: Option<[i64; 2]>,
    thm1: Option<[i64; 2]>,
    wilf_ok: bool,
    thm1_ok: bool,
    type_ok: bool,
    is_equality: bool,
}

impl NumericFields {
    fn recheck(&self) -> Result<(), String> {
        let (c, cp, e, m, t) = (
            self.c as i64,
            self.c_prime as i64,
            self.e as i64,
            self.m as i64,
            self.semigroup_type as i64,
        );
        if c == 0 {
            return match (self.wilf, self.thm1) {
                (None, None) => Ok(()),
                _ => Err("degenerate record carries quotients".into()),
            };
        }
        let lowest = |p: [i64; 2]| -> Result<Rational, String> {
            let r = Rational::new(p[0], p[1]);
            if pair(r) == p {
                Ok(r)
            } else {
                Err(format!("{}/{} is not in lowest terms", p[0], p[1]))
            }
        };
        let wilf = lowest(self.wilf.ok_or("missing wilf quotient")?)?;
        let thm1 = lowest(self.thm1.ok_or("missing theorem 1 bound")?)?;
        if wilf != Rational::new(cp, c) {
            return Err("wilf quotient does not equal c'/c".into());
        }
        if thm1 != Rational::new(2 * c - (m - 1) * (e - 2), 2 * e) {
            return Err("theorem 1 bound does not match c, m, e".into());
        }
        let expected = [
            ("wilf_ok", self.wilf_ok, cp * e >= c),
            ("thm1_ok", self.thm1_ok, Rational::from_integer(cp) >= thm1),
            ("type_ok", self.type_ok, cp * (t + 1) >= c),
            ("is_equality", self.is_equality, cp * e == c),
        ];
        for (name, stored, computed) in expected {
            if stored != computed {
                return Err(format!("{name} stored {stored}, recomputed {computed}"));
            }
        }
        Ok(())
    }
}

fn join_with(values: &[u64], sep: &str) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn join_generators(values: &[u64]) -> String {
    join_with(values, ";")
}

/// Writes records in the given format. CSV output starts with the header.
pub fn write_records<W: Write>(
    out: W,
    records: &[VerificationRecord],
    format: Format,
) -> io::Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(out);
            w.write_record(CSV_HEADER)?;
            for r in records {
                w.serialize(r.to_csv_row())?;
            }
            w.flush()
        }
        Format::Json => {
            let mut out = out;
            for r in records {
                serde_json::to_writer(&mut out, r)?;
                writeln!(out)?;
            }
            Ok(())
        }
        Format::Text => {
            let mut out = out;
            for r in records {
                writeln!(out, "{}", r.to_text())?;
            }
            Ok(())
        }
    }
}

pub fn read_csv_rows<R: io::Read>(input: R) -> Result<Vec<CsvRow>, csv::Error> {
    csv::Reader::from_reader(input).deserialize().collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorizationSetReport {
    pub dimension: usize,
    pub weights: Vec<u64>,
    pub cap: u64,
    pub points: Vec<Point>,
}

/// Everything `analyze` reports about one semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Analysis {
    #[serde(flatten)]
    pub record: VerificationRecord,
    pub apery_set: Vec<u64>,
    pub pseudo_frobenius: Vec<u64>,
    pub factorization_set: Option<FactorizationSetReport>,
    pub lemma31: Option<LemmaInequality>,
}

impl Analysis {
    pub fn of(s: &NumericalSemigroup) -> Self {
        let instance = apery_factorization_set(s).ok();
        Self {
            record: VerificationRecord::from_semigroup(s),
            apery_set: s.apery_set().entries().to_vec(),
            pseudo_frobenius: s
                .pseudo_frobenius()
                .map(|t| t.pseudo_frobenius)
                .unwrap_or_default(),
            lemma31: instance.as_ref().and_then(|i| i.lemma_inequality().ok()),
            factorization_set: instance.map(|i| FactorizationSetReport {
                dimension: i.dimension(),
                weights: i.weights().to_vec(),
                cap: i.cap(),
                points: i.points().to_vec(),
            }),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("analysis serializes") + "\n",
            Format::Csv => {
                let mut buf = Vec::new();
                write_records(&mut buf, std::slice::from_ref(&self.record), Format::Csv)
                    .expect("in-memory write");
                String::from_utf8(buf).expect("csv is utf-8")
            }
            Format::Text => {
                let mut s = self.record.to_text() + "\n";
                let _ = writeln!(s, "apery set: {:?}", self.apery_set);
                let _ = writeln!(s, "pseudo-Frobenius: {:?}", self.pseudo_frobenius);
                if let Some(f) = &self.factorization_set {
                    let _ = writeln!(
                        s,
                        "factorization set: d={} weights={:?} cap={}",
                        f.dimension, f.weights, f.cap
                    );
                    let _ = writeln!(s, "  points: {:?}", f.points);
                }
                if let Some(l) = &self.lemma31 {
                    let _ = writeln!(
                        s,
                        "subset bound: lhs={} rhs={} holds={}",
                        l.lhs, l.rhs, l.holds
                    );
                }
                s
            }
        }
    }
}

/// Record filter of the form `key=value` with key `e`, `m`, `g` or `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Filter {
    EmbeddingDimension(usize),
    Multiplicity(u64),
    Genus(usize),
    Conductor(u64),
}

impl Filter {
    pub fn matches(&self, s: &NumericalSemigroup) -> bool {
        match *self {
            Filter::EmbeddingDimension(e) => s.embedding_dimension() == e,
            Filter::Multiplicity(m) => s.multiplicity() == m,
            Filter::Genus(g) => s.genus() == g,
            Filter::Conductor(c) => s.conductor() == c,
        }
    }
}

impl FromStr for Filter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (key, value) = s
            .split_once('=')
            .ok_or_else(|| format!("filter `{s}` is not of the form key=value"))?;
        let value: u64 = value
            .trim()
            .parse()
            .map_err(|e| format!("filter `{s}`: {e}"))?;
        match key.trim() {
            "e" => Ok(Filter::EmbeddingDimension(value as usize)),
            "m" => Ok(Filter::Multiplicity(value)),
            "g" => Ok(Filter::Genus(value as usize)),
            "c" => Ok(Filter::Conductor(value)),
            other => Err(format!(
                "unknown filter key `{other}` (expected e, m, g or c)"
            )),
        }
    }
}

#[derive(Debug, Clone)]
pub struct EnumerateOptions {
    pub max_genus: usize,
    pub checks: BTreeSet<Check>,
    pub filters: Vec<Filter>,
    pub violations_only: bool,
    pub workers: usize,
}

#[derive(Debug, Clone)]
pub struct EnumerateOutput {
    /// Pre-order tree order, identical for every worker count.
    pub records: Vec<VerificationRecord>,
    /// Covers exactly the semigroups passing the filters.
    pub summary: SweepSummary,
}

pub fn run_enumerate(opts: &EnumerateOptions) -> EnumerateOutput {
    let sweep = Sweep::new(opts.max_genus).with_workers(opts.workers);
    let (summary, records) = sweep.run(
        || {
            (
                SweepSummary::new(opts.max_genus, opts.checks.iter().copied()),
                Vec::new(),
            )
        },
        |(summary, records): &mut (SweepSummary, Vec<VerificationRecord>), node: &TreeNode| {
            let s = node.semigroup();
            if !opts.filters.iter().all(|f| f.matches(s)) {
                return;
            }
            let before = summary.violation_count();
            summary.observe(node);
            if !opts.violations_only || summary.violation_count() > before {
                records.push(VerificationRecord::from_semigroup(s));
            }
        },
        |(summary, records), (other_summary, other_records)| {
            summary.merge(other_summary);
            records.extend(other_records);
        },
    );
    EnumerateOutput {
        records,
        summary: summary.finish(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub genus: usize,
    pub generators: Vec<u64>,
}

impl From<&Witness> for WitnessReport {
    fn from(w: &Witness) -> Self {
        Self {
            genus: w.genus,
            generators: w.generators.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientReport {
    pub quotient: [i64; 2],
    pub m_over_c: [i64; 2],
    pub genus: usize,
    pub generators: Vec<u64>,
}

impl From<&QuotientWitness> for QuotientReport {
    fn from(q: &QuotientWitness) -> Self {
        Self {
            quotient: pair(q.quotient),
            m_over_c: pair(q.m_over_c),
            genus: q.witness.genus,
            generators: q.witness.generators.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    pub e: usize,
    pub count: u64,
    pub equality_count: u64,
    pub min_quotient: Option<QuotientReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SummaryReport {
    pub max_genus: usize,
    pub total: u64,
    pub per_genus: Vec<u64>,
    pub per_embedding_dimension: Vec<EmbeddingReport>,
    pub min_quotient: Option<QuotientReport>,
    pub checks: Vec<String>,
    pub violation_count: usize,
    pub violations: Vec<(String, Vec<WitnessReport>)>,
}

impl From<&SweepSummary> for SummaryReport {
    fn from(s: &SweepSummary) -> Self {
        Self {
            max_genus: s.max_genus,
            total: s.total,
            per_genus: s.per_genus.clone(),
            per_embedding_dimension: s
                .per_embedding_dimension
                .iter()
                .map(|(&e, st)| EmbeddingReport {
                    e,
                    count: st.count,
                    equality_count: st.equality_count,
                    min_quotient: st.min_quotient.as_ref().map(Into::into),
                })
                .collect(),
            min_quotient: s.min_quotient.as_ref().map(Into::into),
            checks: s.checks.iter().map(|c| c.id().to_string()).collect(),
            violation_count: s.violation_count(),
            violations: s
                .violations
                .iter()
                .map(|(c, list)| (c.id().to_string(), list.iter().map(Into::into).collect()))
                .collect(),
        }
    }
}

fn frac(p: [i64; 2]) -> String {
    if p[1] == 1 {
        p[0].to_string()
    } else {
        format!("{}/{}", p[0], p[1])
    }
}

pub fn render_summary(summary: &SweepSummary, format: Format) -> String {
    let report = SummaryReport::from(summary);
    if format == Format::Json {
        return serde_json::to_string(&report).expect("summary serializes") + "\n";
    }
    let mut s = String::new();
    let _ = writeln!(s, "max genus: {}", report.max_genus);
    let _ = writeln!(s, "total: {}", report.total);
    let _ = writeln!(
        s,
        "per genus: {}",
        report
            .per_genus
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(",")
    );
    for e in &report.per_embedding_dimension {
        let _ = write!(
            s,
            "e={}: count={} equality={}",
            e.e, e.count, e.equality_count
        );
        if let Some(q) = &e.min_quotient {
            let _ = write!(
                s,
                " min={} at <{}>",
                frac(q.quotient),
                join_with(&q.generators, ",")
            );
        }
        s.push('\n');
    }
    let _ = writeln!(s, "checks: {}", report.checks.join(","));
    for (id, list) in &report.violations {
        let _ = write!(s, "violations {id}: {}", list.len());
        for w in list.iter().take(10) {
            let _ = write!(s, " <{}>", join_with(&w.generators, ","));
        }
        s.push('\n');
    }
    s
}

#[derive(Debug, Clone)]
pub struct ExtremalOptions {
    pub k: usize,
    /// Only semigroups with `m >= min_multiplicity` are considered.
    pub min_multiplicity: u64,
    pub max_genus: usize,
    pub workers: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrendReport {
    pub genus: usize,
    pub minimum: Option<QuotientReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    pub k: usize,
    pub min_multiplicity: u64,
    pub max_genus: usize,
    /// `"found"` or `"no_instance"`.
    pub result: String,
    pub minimum: Option<QuotientReport>,
    /// Quotient minus `1/k`.
    pub distance: Option<[i64; 2]>,
    pub trend: Vec<TrendReport>,
}

pub fn run_extremal(opts: &ExtremalOptions) -> ExtremalReport {
    let sweep = Sweep::new(opts.max_genus).with_workers(opts.workers);
    let exclusive = opts.min_multiplicity.saturating_sub(1);
    let minimum = empirical_f(sweep, exclusive, opts.k);
    let trend: Vec<TrendRow> = min_quotient_trend(sweep, exclusive, opts.k);
    ExtremalReport {
        k: opts.k,
        min_multiplicity: opts.min_multiplicity,
        max_genus: opts.max_genus,
        result: if minimum.is_some() {
            "found"
        } else {
            "no_instance"
        }
        .into(),
        distance: minimum
            .as_ref()
            .map(|q| pair(bounds::distance_to_threshold(q.quotient, opts.k as u64))),
        minimum: minimum.as_ref().map(Into::into),
        trend: trend
            .iter()
            .map(|row| TrendReport {
                genus: row.genus,
                minimum: row.minimum.as_ref().map(Into::into),
            })
            .collect(),
    }
}

impl ExtremalReport {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("report serializes") + "\n",
            Format::Csv => {
                let mut s = String::from(
                    "genus,quotient_num,quotient_den,m_over_c_num,m_over_c_den,generators\n",
                );
                for row in &self.trend {
                    match &row.minimum {
                        Some(q) => {
                            let _ = writeln!(
                                s,
                                "{},{},{},{},{},{}",
                                row.genus,
                                q.quotient[0],
                                q.quotient[1],
                                q.m_over_c[0],
                                q.m_over_c[1],
                                join_generators(&q.generators)
                            );
                        }
                        None => {
                            let _ = writeln!(s, "{},,,,,", row.genus);
                        }
                    }
                }
                s
            }
            Format::Text => {
                let mut s = String::new();
                match (&self.minimum, self.distance) {
                    (Some(q), Some(d)) => {
                        let _ = writeln!(
                            s,
                            "k={} m>={} genus<={}: min quotient {} at <{}> (genus {}), distance to 1/{} = {}",
                            self.k,
                            self.min_multiplicity,
                            self.max_genus,
                            frac(q.quotient),
                            join_with(&q.generators, ","),
                            q.genus,
                            self.k,
                            frac(d)
                        );
                    }
                    _ => {
                        let _ = writeln!(
                            s,
                            "k={} m>={} genus<={}: no instance",
                            self.k, self.min_multiplicity, self.max_genus
                        );
                    }
                }
                for row in &self.trend {
                    match &row.minimum {
                        Some(q) => {
                            let _ = writeln!(
                                s,
                                "  genus {:>3}: {} (m/c = {}) <{}>",
                                row.genus,
                                frac(q.quotient),
                                frac(q.m_over_c),
                                join_with(&q.generators, ",")
                            );
                        }
                        None => {
                            let _ = writeln!(s, "  genus {:>3}: -", row.genus);
                        }
                    }
                }
                s
            }
        }
    }
}
