//! Command-line front end for the whole workspace: protocol operations on
//! envelope files, the deterministic network simulator, primitive timing,
//! and the cost model.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or format error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use vdas_aggregation_sim::{
    parse_fault_plan, reports_to_csv, reports_to_text, run_seeded, summarize, DeltaPolicy,
    SimConfig,
};
use vdas_bench_cli::{cost_model_table, emit_figures, measure_primitives, OpTimings};
use vdas_core::{wire, Identity, QiSource, RegistrationRecord};
use vdas_security_lab::{run_tamper_suite, AttackKind, TamperConfig};

#[derive(Parser)]
#[command(name = "vdas", about = "certificateless aggregate signature toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ParamsetArgs {
    /// Parameter set label (toy-64 or ss-512).
    #[arg(long, default_value = "toy-64")]
    paramset: String,
    /// Hex seed for deterministic randomness.
    #[arg(long, default_value = "00")]
    seed: String,
}

#[derive(Subcommand)]
enum Command {
    /// Run system setup; writes system_params.txt and master_key.txt.
    Keygen {
        #[command(flatten)]
        common: ParamsetArgs,
        /// Output directory.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Register one terminal; writes terminal_keys.txt and
    /// registration_record.txt.
    Register {
        /// System parameters file from keygen.
        #[arg(long)]
        system: PathBuf,
        /// Master key file from keygen.
        #[arg(long)]
        master: PathBuf,
        /// Terminal identity string.
        #[arg(long)]
        id: String,
        #[arg(long, default_value = "00")]
        seed: String,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Sign one datum under a session string.
    Sign {
        #[arg(long)]
        system: PathBuf,
        /// Terminal key file from register.
        #[arg(long)]
        keys: PathBuf,
        /// Session string as hex.
        #[arg(long)]
        delta: String,
        /// File whose raw bytes are the datum.
        #[arg(long)]
        data: PathBuf,
        #[arg(long, default_value = "00")]
        seed: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Combine individual signature files into one aggregate file.
    Aggregate {
        /// Individual signature files, in roster order.
        #[arg(long = "sig", required = true)]
        sigs: Vec<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Verify an individual or aggregate signature file.
    Verify {
        #[arg(long)]
        system: PathBuf,
        /// Registration record files, in roster order.
        #[arg(long = "record", required = true)]
        records: Vec<PathBuf>,
        #[arg(long)]
        delta: String,
        /// Data files, in roster order.
        #[arg(long = "data", required = true)]
        data: Vec<PathBuf>,
        /// Signature file (either kind).
        #[arg(long)]
        sig: PathBuf,
        /// Recompute every Q_i during verification instead of trusting
        /// the stored records.
        #[arg(long)]
        faithful_table3: bool,
    },
    /// Run the deterministic n-terminal aggregation simulation.
    Simulate {
        #[command(flatten)]
        common: ParamsetArgs,
        /// Number of terminals.
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        rounds: usize,
        /// Fault plan file: one "round,terminal,kind" triple per line.
        #[arg(long)]
        fault_plan: Option<PathBuf>,
        /// Write the per-round CSV here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time the three primitive operations on this machine.
    Bench {
        #[command(flatten)]
        common: ParamsetArgs,
        #[arg(long, default_value_t = 30)]
        iterations: u64,
    },
    /// Evaluate the six-scheme cost model under the reference timings.
    CostModel {
        /// Batch size for the verification column.
        #[arg(long, default_value_t = 10)]
        n: u64,
        /// Also emit signing/verification figure tables to this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the scripted attack batteries; nonzero exit on any false accept.
    TamperSuite {
        #[command(flatten)]
        common: ParamsetArgs,
        #[arg(long, default_value_t = 100)]
        trials: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_file(path: &PathBuf) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_bytes(path: &PathBuf) -> Result<Vec<u8>, String> {
    fs::read(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), String> {
    fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_seed(seed: &str) -> Result<Vec<u8>, String> {
    hex::decode(seed).map_err(|e| format!("bad --seed hex: {e}"))
}

fn group_by_label(label: &str) -> Result<vdas_algebra::GroupParams, String> {
    vdas_algebra::by_label(label).ok_or_else(|| format!("unknown paramset {label:?}"))
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Keygen { common, out } => {
            let group = group_by_label(&common.paramset)?;
            let seed = parse_seed(&common.seed)?;
            let (sys, msk) = vdas_core::setup(&group, &seed);
            fs::create_dir_all(&out).map_err(|e| format!("{}: {e}", out.display()))?;
            write_file(&out.join("system_params.txt"), &wire::system_params_to_text(&sys))?;
            write_file(&out.join("master_key.txt"), &wire::master_key_to_text(&msk, &sys))?;
            println!("wrote system_params.txt and master_key.txt to {}", out.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Register {
            system,
            master,
            id,
            seed,
            out,
        } => {
            let sys = wire::system_params_from_text(&read_file(&system)?)
                .map_err(|e| e.to_string())?;
            let msk =
                wire::master_key_from_text(&read_file(&master)?).map_err(|e| e.to_string())?;
            let identity =
                Identity::new(id.into_bytes()).map_err(|e| e.to_string())?;
            let seed = parse_seed(&seed)?;
            let (keys, record) = vdas_core::register(&msk, &sys, identity, &seed);
            fs::create_dir_all(&out).map_err(|e| format!("{}: {e}", out.display()))?;
            write_file(
                &out.join("terminal_keys.txt"),
                &wire::terminal_keys_to_text(&keys, &sys.group),
            )?;
            write_file(
                &out.join("registration_record.txt"),
                &wire::registration_record_to_text(&record, &sys.group),
            )?;
            println!(
                "wrote terminal_keys.txt and registration_record.txt to {}",
                out.display()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Sign {
            system,
            keys,
            delta,
            data,
            seed,
            out,
        } => {
            let sys = wire::system_params_from_text(&read_file(&system)?)
                .map_err(|e| e.to_string())?;
            let (keys, _) =
                wire::terminal_keys_from_text(&read_file(&keys)?).map_err(|e| e.to_string())?;
            let delta = wire::state_info_from_hex(&delta).map_err(|e| e.to_string())?;
            let data = read_bytes(&data)?;
            let seed = parse_seed(&seed)?;
            let sig = vdas_core::sign(&sys, &keys, &delta, &data, &seed, None);
            write_file(&out, &wire::individual_signature_to_text(&sig, &sys.group))?;
            println!("wrote {}", out.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Aggregate { sigs, out } => {
            let mut parsed = Vec::new();
            let mut group = None;
            for path in &sigs {
                let (sig, g) = wire::individual_signature_from_text(&read_file(path)?)
                    .map_err(|e| format!("{}: {e}", path.display()))?;
                if let Some(prev) = &group {
                    if *prev != g {
                        return Err("signature files use different paramsets".to_string());
                    }
                } else {
                    group = Some(g);
                }
                parsed.push(sig);
            }
            let group = group.expect("clap enforces at least one --sig");
            let agg = vdas_core::aggregate(&parsed, &group).map_err(|e| e.to_string())?;
            write_file(&out, &wire::aggregate_signature_to_text(&agg, &group))?;
            println!("aggregated {} signatures into {}", parsed.len(), out.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            system,
            records,
            delta,
            data,
            sig,
            faithful_table3,
        } => {
            let sys = wire::system_params_from_text(&read_file(&system)?)
                .map_err(|e| e.to_string())?;
            let delta = wire::state_info_from_hex(&delta).map_err(|e| e.to_string())?;
            let mut roster: Vec<RegistrationRecord> = Vec::new();
            for path in &records {
                let (record, _) = wire::registration_record_from_text(&read_file(path)?)
                    .map_err(|e| format!("{}: {e}", path.display()))?;
                roster.push(record);
            }
            let mut data_list = Vec::new();
            for path in &data {
                data_list.push(read_bytes(path)?);
            }
            let env =
                wire::Envelope::from_text(&read_file(&sig)?).map_err(|e| e.to_string())?;
            let qi = if faithful_table3 {
                QiSource::RecomputeFaithful
            } else {
                QiSource::Cached
            };
            let ok = match env.kind.as_str() {
                "individual-signature" => {
                    let (sig, _) = wire::individual_signature_from_text(&env.to_text())
                        .map_err(|e| e.to_string())?;
                    if roster.len() != 1 || data_list.len() != 1 {
                        return Err("individual verify takes one --record and one --data".into());
                    }
                    vdas_core::verify_individual(&sys, &roster[0], &delta, &data_list[0], &sig, None)
                }
                "aggregate-signature" => {
                    let (agg, _) = wire::aggregate_signature_from_text(&env.to_text())
                        .map_err(|e| e.to_string())?;
                    vdas_core::aggregate_verify(&sys, &roster, &delta, &data_list, &agg, qi, None)
                        .map_err(|e| e.to_string())?
                }
                other => return Err(format!("not a signature file (type {other})")),
            };
            if ok {
                println!("verification: accept");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("verification: reject");
                Ok(ExitCode::from(1))
            }
        }
        Command::Simulate {
            common,
            n,
            rounds,
            fault_plan,
            out,
        } => {
            let group = group_by_label(&common.paramset)?;
            let seed = parse_seed(&common.seed)?;
            let plan = match fault_plan {
                Some(path) => parse_fault_plan(&read_file(&path)?)
                    .map_err(|e| e.to_string())?,
                None => vec![],
            };
            let config = SimConfig {
                n_terminals: n,
                rounds,
                rng_seed: seed,
                delta_policy: DeltaPolicy::FreshPerRound,
                fault_plan: plan,
            };
            let reports = run_seeded(&group, &config).map_err(|e| e.to_string())?;
            print!("{}", reports_to_text(&reports));
            let summary = summarize(&reports).map_err(|e| e.to_string())?;
            println!(
                "rounds={} acceptance={:.2} mean_batch_pairings={:.1} aggregate_bytes={}",
                summary.rounds,
                summary.acceptance_rate,
                summary.mean_batch_pairings,
                summary.aggregate_bytes,
            );
            if let Some(path) = out {
                write_file(&path, &reports_to_csv(&reports))?;
                println!("wrote {}", path.display());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench { common, iterations } => {
            let group = group_by_label(&common.paramset)?;
            let timings =
                measure_primitives(&group, iterations).map_err(|e| e.to_string())?;
            let reference = OpTimings::reference();
            println!("op,measured_ms,reference_ms");
            println!("scalar_mult,{:.3},{:.3}", timings.mult_ms, reference.mult_ms);
            println!("map_hash,{:.3},{:.3}", timings.hash_ms, reference.hash_ms);
            println!("pairing,{:.3},{:.3}", timings.pairing_ms, reference.pairing_ms);
            Ok(ExitCode::SUCCESS)
        }
        Command::CostModel { n, out } => {
            let timings = OpTimings::reference();
            print!("{}", cost_model_table(&timings, n));
            if let Some(dir) = out {
                let range: Vec<u64> = (1..=100).collect();
                let (sign_path, verify_path) = emit_figures(&timings, &range, &dir)
                    .map_err(|e| format!("{}: {e}", dir.display()))?;
                println!("wrote {} and {}", sign_path.display(), verify_path.display());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::TamperSuite { common, trials } => {
            let group = group_by_label(&common.paramset)?;
            let seed = parse_seed(&common.seed)?;
            let (sys, msk) = vdas_core::setup(&group, &seed);
            let config = TamperConfig {
                attacks: AttackKind::ALL.to_vec(),
                trials_per_attack: trials,
                seed,
            };
            let report = run_tamper_suite(&sys, &msk, &config);
            print!("{}", report.to_text());
            if report.false_accepts() == 0 {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}
