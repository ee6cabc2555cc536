//! Seeded Monte-Carlo estimation of decoding failure rates.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use ihpd_core::code::Code;
use ihpd_core::decoder::Decoder;
use ihpd_core::gf::Field;
use ihpd_core::hermitian::Curve;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Two-sided 95% normal quantile.
const Z95: f64 = 1.959_963_984_540_054;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrialConfig {
    pub q: u32,
    pub m_h: usize,
    pub h: usize,
    pub s: usize,
    pub ell: usize,
    pub t_values: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    /// Worker threads; `None` uses the global pool.
    #[serde(default)]
    pub threads: Option<usize>,
}

impl TrialConfig {
    pub fn build_code(&self) -> anyhow::Result<Code> {
        let field = Field::for_q(self.q)?;
        let code = Code::new(Curve::new(field), self.m_h, self.h)?;
        self.validate(&code)?;
        Ok(code)
    }

    fn validate(&self, code: &Code) -> anyhow::Result<()> {
        anyhow::ensure!(self.trials >= 1, "trials must be at least 1");
        anyhow::ensure!(
            self.s >= 1 && self.s <= self.ell,
            "need 1 <= s <= l, got s = {}, l = {}",
            self.s,
            self.ell
        );
        if let Some(&t) = self.t_values.iter().find(|&&t| t > code.n()) {
            anyhow::bail!("t = {t} exceeds n = {}", code.n());
        }
        Ok(())
    }
}

/// One line of results; the deterministic part of a run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub q: u32,
    #[serde(rename = "mH")]
    pub m_h: usize,
    pub n: usize,
    pub k: usize,
    pub h: usize,
    pub s: usize,
    pub ell: usize,
    pub t: usize,
    #[serde(rename = "N")]
    pub trials: usize,
    pub failures: usize,
    pub miscorrections: usize,
    pub rate: f64,
    pub wilson_lo: f64,
    pub wilson_hi: f64,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SummaryStats {
    pub config: TrialConfig,
    pub d_star: usize,
    pub rows: Vec<SummaryRow>,
    /// Mean wall-clock time per decode, one entry per row.
    pub mean_decode_time: Vec<Duration>,
}

/// 95% Wilson score interval for `failures` out of `n`.
pub fn wilson_interval(failures: usize, n: usize) -> (f64, f64) {
    if n == 0 {
        return (0.0, 1.0);
    }
    let n = n as f64;
    let p = failures as f64 / n;
    let z2 = Z95 * Z95;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = Z95 / denom * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    ((center - half).max(0.0), (center + half).min(1.0))
}

/// SplitMix64 finaliser, used to spread (seed, t, index) over the seed space.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// The RNG of trial `index` at error count `t`.
pub fn trial_rng(seed: u64, t: usize, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(mix(mix(mix(seed) ^ t as u64) ^ index as u64))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrialResult {
    Success,
    /// The decoder declared failure.
    Declared,
    /// The decoder returned a different message.
    Miscorrection,
}

/// One encode, corrupt, decode cycle with a fresh random message.
pub fn run_trial(
    code: &Code,
    decoder: &Decoder,
    s: usize,
    ell: usize,
    t: usize,
    rng: &mut ChaCha8Rng,
) -> TrialResult {
    let msgs = code.random_messages(rng);
    let err = code
        .random_burst_error(t, rng)
        .expect("t validated against n");
    let word = code
        .encode(&msgs)
        .expect("message dimensions match")
        .add(code.field(), &err.matrix);
    let outcome = decoder
        .decode(&word, s, ell)
        .expect("word dimensions match");
    match outcome.messages() {
        Some(m) if m == &msgs[..] => TrialResult::Success,
        Some(_) => TrialResult::Miscorrection,
        None => TrialResult::Declared,
    }
}

pub fn run_trials(config: &TrialConfig) -> anyhow::Result<SummaryStats> {
    let code = config.build_code()?;
    let decoder = Decoder::new(&code);
    let work = || -> Vec<(SummaryRow, Duration)> {
        config
            .t_values
            .iter()
            .map(|&t| {
                let start = Instant::now();
                let results: Vec<TrialResult> = (0..config.trials)
                    .into_par_iter()
                    .map(|i| {
                        let mut rng = trial_rng(config.seed, t, i);
                        run_trial(&code, &decoder, config.s, config.ell, t, &mut rng)
                    })
                    .collect();
                let elapsed = start.elapsed() / config.trials as u32;
                let failures = results
                    .iter()
                    .filter(|r| **r != TrialResult::Success)
                    .count();
                let miscorrections = results
                    .iter()
                    .filter(|r| **r == TrialResult::Miscorrection)
                    .count();
                let (wilson_lo, wilson_hi) = wilson_interval(failures, config.trials);
                let row = SummaryRow {
                    q: config.q,
                    m_h: config.m_h,
                    n: code.n(),
                    k: code.k(),
                    h: config.h,
                    s: config.s,
                    ell: config.ell,
                    t,
                    trials: config.trials,
                    failures,
                    miscorrections,
                    rate: failures as f64 / config.trials as f64,
                    wilson_lo,
                    wilson_hi,
                    seed: config.seed,
                };
                (row, elapsed)
            })
            .collect()
    };
    let out = match config.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()?
            .install(work),
        None => work(),
    };
    let (rows, mean_decode_time) = out.into_iter().unzip();
    Ok(SummaryStats {
        config: config.clone(),
        d_star: code.designed_distance(),
        rows,
        mean_decode_time,
    })
}

pub fn to_csv(rows: &[SummaryRow]) -> anyhow::Result<String> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for row in rows {
        w.serialize(row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub const CSV_HEADER: [&str; 15] = [
    "q",
    "mH",
    "n",
    "k",
    "h",
    "s",
    "ell",
    "t",
    "N",
    "failures",
    "miscorrections",
    "rate",
    "wilson_lo",
    "wilson_hi",
    "seed",
];

pub fn parse_csv(text: &str) -> anyhow::Result<Vec<SummaryRow>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = r.headers()?.iter().map(str::to_owned).collect();
    anyhow::ensure!(header == CSV_HEADER, "unexpected CSV header {header:?}");
    Ok(r.deserialize().collect::<Result<Vec<SummaryRow>, _>>()?)
}

/// Aligned text in the usual failure-rate layout plus the split of
/// failures.
pub fn to_table(stats: &SummaryStats) -> String {
    let header = [
        "q", "m_H", "n", "k", "d*", "h", "l", "s", "t", "rate", "N", "failures", "miscorr",
    ];
    let mut lines: Vec<Vec<String>> = vec![header.iter().map(|s| s.to_string()).collect()];
    for r in &stats.rows {
        lines.push(vec![
            r.q.to_string(),
            r.m_h.to_string(),
            r.n.to_string(),
            r.k.to_string(),
            stats.d_star.to_string(),
            r.h.to_string(),
            r.ell.to_string(),
            r.s.to_string(),
            r.t.to_string(),
            format_rate(r.rate),
            r.trials.to_string(),
            r.failures.to_string(),
            r.miscorrections.to_string(),
        ]);
    }
    let widths: Vec<usize> = (0..header.len())
        .map(|c| lines.iter().map(|l| l[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for line in lines {
        let cells: Vec<String> = line
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect();
        let _ = writeln!(out, "{}", cells.join("  ").trim_end());
    }
    out
}

fn format_rate(rate: f64) -> String {
    if rate == 0.0 {
        "0".into()
    } else if rate == 1.0 {
        "1".into()
    } else {
        format!("{rate:.3e}")
    }
}
