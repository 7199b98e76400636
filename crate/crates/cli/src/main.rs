use std::error::Error;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use knotaj::apoly::{check_hs_properties, irreducibility_certificate, r_poly, riley_oracle, twist_aprime};
use knotaj::guess::{guess_recurrence, GuessConfig, GuessError};
use knotaj::harness::{read_sequence_file, verify_aj, write_sequence_file, Cache, VerifyConfig};
use knotaj::jones::{colored_jones_skein, twist_sequence, SkeinConfig};
use knotaj::poly::write_terms;

#[derive(Parser)]
#[command(name = "knotaj", about = "Colored Jones recurrences and A-polynomials of twist-knot cables")]
struct Cli {
    /// Cache directory for colored Jones values (overrides KNOTAJ_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Write a JSON report here.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Skein,
    Fast,
}

#[derive(Subcommand)]
enum Cmd {
    /// Colored Jones values of K_m as a sequence file.
    Jones {
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long)]
        n: i64,
        /// Emit every color from n up to this one.
        #[arg(long)]
        to: Option<i64>,
        #[arg(long, value_enum, default_value = "fast")]
        method: Method,
    },
    /// Search for the smallest annihilator of a sequence file.
    Guess {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        dcap: usize,
        /// Cap on the M-degree of each coefficient, in units of M^stride.
        #[arg(long, default_value_t = 30)]
        mcap: usize,
        #[arg(long, default_value_t = 1)]
        stride: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The tabulated A' of K_m and its resultant R.
    Apoly {
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        /// Run the property suite, the irreducibility certificate and the numeric oracle.
        #[arg(long)]
        check: bool,
    },
    /// End-to-end AJ verification for the (r, 2)-cable of K_m.
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, default_value_t = 2)]
        dcap: usize,
        /// Cap on the M-degree, in units of M^2.
        #[arg(long, default_value_t = 30)]
        mcap: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run even outside the proven region; the verdict stays NOT_APPLICABLE.
        #[arg(long)]
        explore: bool,
    },
}

fn cache(cli: &Cli) -> Result<Option<Cache>, Box<dyn Error>> {
    Ok(match &cli.cache_dir {
        Some(dir) => Some(Cache::new(dir)?),
        None => Cache::from_env()?,
    })
}

fn write_report(cli: &Cli, json: &str) -> Result<(), Box<dyn Error>> {
    if let Some(path) = &cli.report {
        std::fs::write(path, json)?;
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<bool, Box<dyn Error>> {
    match &cli.cmd {
        Cmd::Jones { m, n, to, method } => {
            let colors = *n..=to.unwrap_or(*n);
            let values = match method {
                Method::Fast => {
                    let seq = match cache(cli)? {
                        Some(c) => c.twist_sequence(*m)?,
                        None => twist_sequence(*m)?,
                    };
                    seq.prefetch(colors.clone())?;
                    colors.map(|k| Ok((k, (*seq.get(k)?).clone()))).collect::<Result<Vec<_>, Box<dyn Error>>>()?
                }
                Method::Skein => {
                    let cfg = SkeinConfig::default();
                    colors
                        .map(|k| Ok((k, colored_jones_skein(*m, k, &cfg)?)))
                        .collect::<Result<Vec<_>, Box<dyn Error>>>()?
                }
            };
            print!("{}", write_sequence_file(&format!("twist({m})"), &values)?);
            Ok(true)
        }
        Cmd::Guess { input, dcap, mcap, stride, seed } => {
            let values = read_sequence_file(&std::fs::read_to_string(input)?)?;
            let cfg =
                GuessConfig { d_cap: *dcap, delta_cap: *mcap, m_stride: *stride, seed: *seed, ..Default::default() };
            for d in 0..=*dcap {
                for delta in 0..=*mcap {
                    match guess_recurrence(&values, d, delta, &cfg) {
                        Ok(Some(op)) => {
                            println!("# d = {d}, delta = {delta}");
                            print!("{}", op.to_text());
                            write_report(
                                cli,
                                &format!(
                                    "{{\"d\": {d}, \"delta\": {delta}, \"m_stride\": {stride}, \"operator\": {:?}}}\n",
                                    write_terms(&op.to_poly())?
                                ),
                            )?;
                            return Ok(true);
                        }
                        Ok(None) => {}
                        Err(GuessError::Undersupply { needed, have, .. }) => {
                            eprintln!("stopping at ({d}, {delta}): needs {needed} equations, file gives {have}");
                            return Ok(false);
                        }
                        Err(e) => return Err(e.into()),
                    }
                }
            }
            eprintln!("{}", GuessError::CapsExhausted { d_cap: *dcap, delta_cap: *mcap });
            Ok(false)
        }
        Cmd::Apoly { m, check } => {
            println!("# A' of K_{m}");
            print!("{}", write_terms(twist_aprime(*m)?.poly())?);
            println!("# R = Res(A'(lambda, M), lambda^2 - L)");
            print!("{}", write_terms(r_poly(*m)?.poly())?);
            if !check {
                return Ok(true);
            }
            let props = check_hs_properties(*m)?;
            let cert = irreducibility_certificate(*m)?;
            let oracle = riley_oracle(*m, 50, 1)?;
            for c in props.checks.iter().chain(&cert.checks) {
                eprintln!("[{}] {}: {}", if c.passed { "ok" } else { "FAIL" }, c.name, c.detail);
            }
            eprintln!(
                "[{}] numeric oracle: {} pairs, max residual {:.2e}",
                if oracle.passed() { "ok" } else { "FAIL" },
                oracle.pairs,
                oracle.max_residual
            );
            write_report(
                cli,
                &serde_json::to_string_pretty(&serde_json::json!({
                    "m": m, "properties": props, "certificate": cert,
                    "oracle": { "pairs": oracle.pairs, "max_residual": oracle.max_residual, "passed": oracle.passed() },
                }))?,
            )?;
            Ok(props.passed() && cert.passed() && oracle.passed())
        }
        Cmd::Verify { m, r, dcap, mcap, seed, explore } => {
            let mut cfg = VerifyConfig { explore: *explore, cache: cache(cli)?, ..Default::default() };
            cfg.guess.d_cap = *dcap;
            cfg.guess.delta_cap = *mcap;
            cfg.guess.seed = *seed;
            let rep = verify_aj(*m, *r, &cfg)?;
            print!("{}", rep.digest());
            write_report(cli, &rep.to_json())?;
            Ok(rep.verdict.is_success())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
