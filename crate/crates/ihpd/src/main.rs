use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use ihpd::formats::{CodeParams, MessageFile, WordFile};
use ihpd::sim::{self, TrialConfig};
use ihpd_core::decoder::{DecodeOutcome, Decoder, LocatorBound};
use ihpd_core::radius::{self, RadiusParams};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Improved power decoding of interleaved one-point Hermitian codes.
#[derive(Parser)]
#[command(name = "ihpd", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct CodeArgs {
    /// Curve parameter; the field has q^2 elements.
    #[arg(long)]
    q: u32,
    /// Pole order m_H of the one-point divisor.
    #[arg(long = "mH")]
    m_h: usize,
    /// Interleaving order.
    #[arg(long, default_value_t = 1)]
    h: usize,
}

impl CodeArgs {
    fn params(self) -> CodeParams {
        CodeParams {
            q: self.q,
            m_h: self.m_h,
            h: self.h,
        }
    }
}

#[derive(Args, Clone, Copy)]
struct PowerArgs {
    /// Multiplicity parameter.
    #[arg(long)]
    s: usize,
    /// Powering parameter.
    #[arg(long = "l")]
    ell: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Code parameters, plus the radius analysis when s and l are given.
    Params {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, requires = "ell")]
        s: Option<usize>,
        #[arg(long = "l", requires = "s")]
        ell: Option<usize>,
    },
    /// Radii for all 1 <= s <= l <= l-max.
    Radii {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, default_value_t = 5)]
        l_max: usize,
    },
    /// Radii of RS, interleaved RS and interleaved Hermitian codes of equal
    /// length and dimension.
    Compare {
        #[arg(long)]
        q: u64,
        #[arg(long, required_unless_present = "rate", conflicts_with = "rate")]
        k: Option<u64>,
        /// Code rate k/n; k is rounded to the nearest integer.
        #[arg(long)]
        rate: Option<f64>,
        #[arg(long, default_value_t = 1)]
        h: u64,
    },
    /// Encodes messages from a file, or random ones drawn from --seed.
    Encode {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, conflicts_with = "seed", required_unless_present = "seed")]
        messages: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        /// Where to write the random messages.
        #[arg(long, requires = "seed")]
        messages_out: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Adds a random burst error of t columns.
    Corrupt {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decodes a received word; exits with 1 if decoding fails.
    Decode {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        power: PowerArgs,
        /// Accept locators up to s(|E| + g) instead of s|E| + g.
        #[arg(long)]
        relaxed_bound: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monte-Carlo failure rates.
    Simulate {
        /// JSON file with the fields of a trial configuration.
        #[arg(long, conflicts_with_all = ["q", "m_h", "h", "s", "ell", "t", "trials", "seed", "threads"])]
        config: Option<PathBuf>,
        #[arg(long, required_unless_present = "config")]
        q: Option<u32>,
        #[arg(long = "mH", required_unless_present = "config")]
        m_h: Option<usize>,
        #[arg(long)]
        h: Option<usize>,
        #[arg(long, required_unless_present = "config")]
        s: Option<usize>,
        #[arg(long = "l", required_unless_present = "config")]
        ell: Option<usize>,
        /// Error counts, comma separated.
        #[arg(long, value_delimiter = ',', required_unless_present = "config")]
        t: Vec<usize>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        threads: Option<usize>,
        /// Also write the rows as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Encode, corrupt and decode one random word, logging each stage.
    Roundtrip {
        #[command(flatten)]
        code: CodeArgs,
        #[command(flatten)]
        power: PowerArgs,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn write_output(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> anyhow::Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn to_json<T: serde::Serialize>(value: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string(value)? + "\n")
}

fn radius_params(code: CodeArgs, power: PowerArgs) -> anyhow::Result<RadiusParams> {
    Ok(RadiusParams::new(
        code.q as u64,
        code.m_h as u64,
        code.h as u64,
        power.s as u64,
        power.ell as u64,
    )?)
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Params { code, s, ell } => {
            let power = PowerArgs {
                s: s.unwrap_or(1),
                ell: ell.unwrap_or(1),
            };
            let r = radius::report(&radius_params(code, power)?);
            println!("n={}", r.n);
            println!("k={}", r.k);
            println!("g={}", r.genus);
            println!("d*={}", r.n - r.params.m_h);
            println!("t_K={}", r.t_kampf.floor());
            println!("t_K_exact={}", r.t_kampf);
            if s.is_some() {
                println!("delta(tau)={}*tau{:+}", r.delta_slope, r.delta_intercept);
                println!("tau_max={}", r.tau_max);
                println!("t_new={}", r.t_new_floor);
                println!("t_new_exact={}", r.t_new);
                println!("valid={}", r.valid);
            }
        }
        Command::Radii { code, l_max } => {
            println!(
                "{:>3} {:>3} {:>12} {:>8} {:>6} {:>5}",
                "l", "s", "tau_max", "t_new", "t_K", "valid"
            );
            for ell in 1..=l_max {
                for s in 1..=ell {
                    let r = radius::report(&radius_params(code, PowerArgs { s, ell })?);
                    println!(
                        "{:>3} {:>3} {:>12} {:>8} {:>6} {:>5}",
                        ell,
                        s,
                        r.tau_max.to_string(),
                        r.t_new_floor,
                        r.t_kampf.floor().to_integer(),
                        r.valid
                    );
                }
            }
        }
        Command::Compare { q, k, rate, h } => {
            let k = match (k, rate) {
                (Some(k), _) => k,
                (None, Some(r)) => {
                    anyhow::ensure!(r > 0.0 && r < 1.0, "rate must lie in (0, 1)");
                    (r * (q * q * q) as f64).round() as u64
                }
                (None, None) => unreachable!("clap requires one of them"),
            };
            let c = radius::compare_radii(q, k, h)?;
            println!("q={q} n={} k={}", c.n, c.k);
            println!("t_RS={}", c.t_rs);
            println!("t_IRS={}", c.t_irs);
            println!("t_IH={}", c.t_ih);
            println!("t_IH/t_RS={:.3}", c.t_ih as f64 / c.t_rs as f64);
            println!("t_IH/t_IRS={:.3}", c.t_ih as f64 / c.t_irs as f64);
        }
        Command::Encode {
            code,
            messages,
            seed,
            messages_out,
            out,
        } => {
            let c = code.params().build()?;
            let msgs = match (messages, seed) {
                (Some(path), _) => read_json::<MessageFile>(&path)?.to_messages(&c)?,
                (None, Some(seed)) => {
                    let msgs = c.random_messages(&mut ChaCha8Rng::seed_from_u64(seed));
                    if let Some(p) = messages_out {
                        write_output(Some(&p), &to_json(&MessageFile::new(&c, &msgs))?)?;
                    }
                    msgs
                }
                (None, None) => unreachable!("clap requires one of them"),
            };
            let word = c.encode(&msgs)?;
            write_output(out.as_deref(), &to_json(&WordFile::new(&c, &word))?)?;
        }
        Command::Corrupt {
            input,
            t,
            seed,
            out,
        } => {
            let file: WordFile = read_json(&input)?;
            let c = file.params.build()?;
            let word = file.to_word(&c)?;
            let err = c.random_burst_error(t, &mut ChaCha8Rng::seed_from_u64(seed))?;
            eprintln!("error positions: {:?}", err.positions);
            let received = word.add(c.field(), &err.matrix);
            write_output(out.as_deref(), &to_json(&WordFile::new(&c, &received))?)?;
        }
        Command::Decode {
            input,
            power,
            relaxed_bound,
            out,
        } => {
            let file: WordFile = read_json(&input)?;
            let c = file.params.build()?;
            let word = file.to_word(&c)?;
            let bound = if relaxed_bound {
                LocatorBound::Relaxed
            } else {
                LocatorBound::Tight
            };
            let decoder = Decoder::new(&c).with_locator_bound(bound);
            let outcome = decoder.decode(&word, power.s, power.ell)?;
            report_warnings(&outcome);
            match outcome.messages() {
                Some(msgs) => {
                    eprintln!(
                        "corrected {} error columns: {:?}",
                        outcome.positions().unwrap().len(),
                        outcome.positions().unwrap()
                    );
                    write_output(out.as_deref(), &to_json(&MessageFile::new(&c, msgs))?)?;
                }
                None => {
                    eprintln!(
                        "decoding failed at stage {:?}",
                        outcome.failure_stage().unwrap()
                    );
                    return Ok(ExitCode::from(1));
                }
            }
        }
        Command::Simulate {
            config,
            q,
            m_h,
            h,
            s,
            ell,
            t,
            trials,
            seed,
            threads,
            csv,
        } => {
            let config = match config {
                Some(path) => read_json::<TrialConfig>(&path)?,
                None => TrialConfig {
                    q: q.unwrap(),
                    m_h: m_h.unwrap(),
                    h: h.unwrap_or(1),
                    s: s.unwrap(),
                    ell: ell.unwrap(),
                    t_values: t,
                    trials: trials.unwrap_or(1000),
                    seed: seed.unwrap_or(0),
                    threads,
                },
            };
            let stats = sim::run_trials(&config)?;
            print!("{}", sim::to_table(&stats));
            for (row, time) in stats.rows.iter().zip(&stats.mean_decode_time) {
                eprintln!(
                    "t={}: mean decode time {:.3} ms",
                    row.t,
                    time.as_secs_f64() * 1e3
                );
            }
            if let Some(path) = csv {
                write_output(Some(&path), &sim::to_csv(&stats.rows)?)?;
            }
        }
        Command::Roundtrip {
            code,
            power,
            t,
            seed,
        } => {
            let c = code.params().build()?;
            let r = radius::report(&radius_params(code, power)?);
            println!(
                "code: q={} mH={} h={} n={} k={} g={} d*={}",
                code.q,
                code.m_h,
                code.h,
                c.n(),
                c.k(),
                c.genus(),
                c.designed_distance()
            );
            println!(
                "radius: tau_max={} t_new={} ({})",
                r.tau_max, r.t_new, r.t_new_floor
            );
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let msgs = c.random_messages(&mut rng);
            let word = c.encode(&msgs)?;
            println!("encoded {} message(s) of {} symbols", msgs.len(), c.k());
            let err = c.random_burst_error(t, &mut rng)?;
            println!("error positions ({}): {:?}", t, err.positions);
            let received = word.add(c.field(), &err.matrix);
            let outcome = Decoder::new(&c).decode(&received, power.s, power.ell)?;
            report_warnings(&outcome);
            match outcome.tau {
                Some(tau) => println!("minimal solution: deg lambda_0 = {tau}"),
                None => println!("minimal solution: none"),
            }
            match outcome.messages() {
                Some(m) if m == &msgs[..] => {
                    println!("recovered message: {:?}", MessageFile::new(&c, m).messages);
                }
                Some(_) => println!("decoder returned a different codeword"),
                None => println!(
                    "decoding failed at stage {:?}",
                    outcome.failure_stage().unwrap()
                ),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn report_warnings(outcome: &DecodeOutcome) {
    for w in &outcome.warnings {
        eprintln!("warning: {w:?}");
    }
}
