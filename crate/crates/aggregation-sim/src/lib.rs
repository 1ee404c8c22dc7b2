//! Deterministic in-memory simulation of the three-party aggregation
//! network: one key generation center, n terminals, one data center.
//!
//! Each round broadcasts a session string, lets every terminal sign its
//! datum, aggregates at the data center, and batch-verifies with three
//! pairings. Scheduled faults are applied for exactly one round; a failed
//! batch falls back to per-signature verification to localize culprits.
//! Everything is driven by a seeded RNG, so identical configs produce
//! byte-identical report lists.

use rand::RngCore;
use thiserror::Error;
use vdas_algebra::{point_mul, random_nonzero_scalar, seeded_rng, OpCounter, OpCounts};
use vdas_core::{
    aggregate, aggregate_verify, register, setup, sign, verify_individual, wire, Identity,
    IndividualSignature, QiSource, RegistrationRecord, StateInfo, SystemParams, TerminalKeys,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimError {
    #[error("simulation needs at least one terminal")]
    NoTerminals,
    #[error("simulation needs at least one round")]
    NoRounds,
    #[error("fault targets round {round}, but the run has {rounds} rounds")]
    FaultRoundOutOfRange { round: usize, rounds: usize },
    #[error("fault targets terminal {terminal}, but the run has {terminals} terminals")]
    FaultTerminalOutOfRange { terminal: usize, terminals: usize },
    #[error("delta policy supplies {supplied} values for {rounds} rounds")]
    DeltaCountMismatch { supplied: usize, rounds: usize },
    #[error("bad fault plan line {line}: {reason}")]
    FaultPlanParse { line: usize, reason: String },
    #[error("unknown fault kind {0:?}")]
    UnknownFaultKind(String),
    #[error("no reports to summarize")]
    EmptyReportList,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaultKind {
    /// One bit of the uploaded datum is flipped after signing.
    FlipData,
    /// The data center's stored public key for the terminal is swapped for
    /// a fresh one during the round.
    ReplacePubkey,
    /// The terminal signs under a stale session string instead of the
    /// broadcast one.
    ReuseOldDelta,
    /// The terminal uploads nothing.
    DropSignature,
    /// The V component is replaced by a random group element.
    ForgeRandomV,
}

impl FaultKind {
    pub const ALL: [FaultKind; 5] = [
        FaultKind::FlipData,
        FaultKind::ReplacePubkey,
        FaultKind::ReuseOldDelta,
        FaultKind::DropSignature,
        FaultKind::ForgeRandomV,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FaultKind::FlipData => "flip-data",
            FaultKind::ReplacePubkey => "replace-pubkey",
            FaultKind::ReuseOldDelta => "reuse-old-delta",
            FaultKind::DropSignature => "drop-signature",
            FaultKind::ForgeRandomV => "forge-random-v",
        }
    }

    pub fn parse(name: &str) -> Result<FaultKind, SimError> {
        FaultKind::ALL
            .into_iter()
            .find(|k| k.name() == name)
            .ok_or_else(|| SimError::UnknownFaultKind(name.to_string()))
    }
}

/// One scheduled fault: applied in `round` to `terminal`, then restored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScheduledFault {
    pub round: usize,
    pub terminal: usize,
    pub kind: FaultKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeltaPolicy {
    /// 16 seeded-random bytes per round, drawn before signing.
    FreshPerRound,
    /// Caller-supplied session strings, one per round.
    Provided(Vec<Vec<u8>>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimConfig {
    pub n_terminals: usize,
    pub rounds: usize,
    pub rng_seed: Vec<u8>,
    pub delta_policy: DeltaPolicy,
    pub fault_plan: Vec<ScheduledFault>,
}

impl SimConfig {
    pub fn validate(&self) -> Result<(), SimError> {
        if self.n_terminals == 0 {
            return Err(SimError::NoTerminals);
        }
        if self.rounds == 0 {
            return Err(SimError::NoRounds);
        }
        for fault in &self.fault_plan {
            if fault.round >= self.rounds {
                return Err(SimError::FaultRoundOutOfRange {
                    round: fault.round,
                    rounds: self.rounds,
                });
            }
            if fault.terminal >= self.n_terminals {
                return Err(SimError::FaultTerminalOutOfRange {
                    terminal: fault.terminal,
                    terminals: self.n_terminals,
                });
            }
        }
        if let DeltaPolicy::Provided(deltas) = &self.delta_policy {
            if deltas.len() != self.rounds {
                return Err(SimError::DeltaCountMismatch {
                    supplied: deltas.len(),
                    rounds: self.rounds,
                });
            }
        }
        Ok(())
    }
}

/// Message count and byte total on one logical link.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LinkStats {
    pub messages: u64,
    pub bytes: u64,
}

impl LinkStats {
    fn push(&mut self, bytes: usize) {
        self.messages += 1;
        self.bytes += bytes as u64;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundReport {
    pub round: usize,
    pub delta: Vec<u8>,
    pub verdict: bool,
    /// True when the upload count did not match the roster, detected
    /// before any pairing work.
    pub shape_error: bool,
    /// Terminal indices flagged by localization; empty on honest rounds.
    pub culprits: Vec<usize>,
    /// Data center -> terminals session broadcast.
    pub broadcast: LinkStats,
    /// Terminals -> data center datum + signature uploads.
    pub uplink: LinkStats,
    /// Encoded size of the aggregate signature body.
    pub aggregate_bytes: usize,
    /// Data center ops for the batch verification alone.
    pub batch_ops: OpCounts,
    /// Data center ops for the per-signature fallback (zero when the batch
    /// verdict was true).
    pub localization_ops: OpCounts,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimSummary {
    pub rounds: usize,
    pub acceptance_rate: f64,
    pub mean_batch_pairings: f64,
    pub mean_uplink_bytes: f64,
    pub aggregate_bytes: usize,
}

/// Parses "round,terminal,kind" triples, one per line. Blank lines and
/// lines starting with '#' are skipped.
pub fn parse_fault_plan(text: &str) -> Result<Vec<ScheduledFault>, SimError> {
    let mut plan = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = line.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(SimError::FaultPlanParse {
                line: idx + 1,
                reason: "expected round,terminal,kind".to_string(),
            });
        }
        let round = parts[0].parse().map_err(|_| SimError::FaultPlanParse {
            line: idx + 1,
            reason: format!("bad round {:?}", parts[0]),
        })?;
        let terminal = parts[1].parse().map_err(|_| SimError::FaultPlanParse {
            line: idx + 1,
            reason: format!("bad terminal {:?}", parts[1]),
        })?;
        let kind = FaultKind::parse(parts[2])?;
        plan.push(ScheduledFault {
            round,
            terminal,
            kind,
        });
    }
    Ok(plan)
}

struct Terminal {
    keys: TerminalKeys,
}

/// One upload as the data center sees it.
struct Upload {
    terminal: usize,
    data: Vec<u8>,
    sig: IndividualSignature,
}

pub fn run_simulation(
    sys: &SystemParams,
    msk: &vdas_core::MasterKey,
    config: &SimConfig,
) -> Result<Vec<RoundReport>, SimError> {
    config.validate()?;
    let group = &sys.group;
    let n = config.n_terminals;

    // Registration happens once: the KGC extracts partial keys and the
    // data center stores <ID, Q, Ppub> for every terminal.
    let mut reg_rng = seeded_rng("sim-register", &config.rng_seed);
    let mut terminals = Vec::with_capacity(n);
    let mut records: Vec<RegistrationRecord> = Vec::with_capacity(n);
    for i in 0..n {
        let id = Identity::new(format!("terminal-{i}").into_bytes()).unwrap();
        let mut seed = [0u8; 32];
        reg_rng.fill_bytes(&mut seed);
        let (keys, record) = register(msk, sys, id, &seed);
        terminals.push(Terminal { keys });
        records.push(record);
    }

    let mut round_rng = seeded_rng("sim-rounds", &config.rng_seed);
    let mut reports = Vec::with_capacity(config.rounds);
    for round in 0..config.rounds {
        let delta_bytes = match &config.delta_policy {
            DeltaPolicy::FreshPerRound => {
                let mut d = vec![0u8; 16];
                round_rng.fill_bytes(&mut d);
                d
            }
            DeltaPolicy::Provided(list) => list[round].clone(),
        };
        let delta = StateInfo::new(delta_bytes.clone()).unwrap();

        let mut broadcast = LinkStats::default();
        for _ in 0..n {
            broadcast.push(delta_bytes.len());
        }

        // Apply this round's record tampering; originals are restored at
        // the end of the round.
        let mut replaced: Vec<(usize, RegistrationRecord)> = Vec::new();
        for fault in config.fault_plan.iter().filter(|f| f.round == round) {
            if fault.kind == FaultKind::ReplacePubkey {
                replaced.push((fault.terminal, records[fault.terminal].clone()));
                let x_new = random_nonzero_scalar(&mut round_rng, group);
                records[fault.terminal].ppub = point_mul(&x_new, &group.generator, group, None);
            }
        }

        let mut uplink = LinkStats::default();
        let mut uploads: Vec<Upload> = Vec::with_capacity(n);
        for (i, terminal) in terminals.iter().enumerate() {
            let mut data = vec![0u8; 32];
            round_rng.fill_bytes(&mut data);
            let mut sign_seed = [0u8; 32];
            round_rng.fill_bytes(&mut sign_seed);

            let fault = config
                .fault_plan
                .iter()
                .find(|f| f.round == round && f.terminal == i)
                .map(|f| f.kind);

            let sign_delta = if fault == Some(FaultKind::ReuseOldDelta) {
                StateInfo::new(format!("stale-{round}").into_bytes()).unwrap()
            } else {
                delta.clone()
            };
            let mut sig = sign(sys, &terminal.keys, &sign_delta, &data, &sign_seed, None);

            match fault {
                Some(FaultKind::DropSignature) => continue,
                Some(FaultKind::FlipData) => {
                    let bit = (round_rng.next_u32() as usize) % (data.len() * 8);
                    data[bit / 8] ^= 1 << (bit % 8);
                }
                Some(FaultKind::ForgeRandomV) => {
                    sig.v = point_mul(
                        &random_nonzero_scalar(&mut round_rng, group),
                        &group.generator,
                        group,
                        None,
                    );
                }
                _ => {}
            }

            uplink.push(data.len() + wire::signature_body_len(group));
            uploads.push(Upload {
                terminal: i,
                data,
                sig,
            });
        }

        let batch_counter = OpCounter::new();
        let localization_counter = OpCounter::new();
        let mut culprits = Vec::new();
        let mut aggregate_bytes = 0;

        let shape_error = uploads.len() != n;
        let verdict = if shape_error {
            // Count mismatch against the roster; flagged before any
            // pairing work. The missing indices are known from the
            // upload bookkeeping.
            let present: Vec<usize> = uploads.iter().map(|u| u.terminal).collect();
            culprits = (0..n).filter(|i| !present.contains(i)).collect();
            false
        } else {
            let sigs: Vec<IndividualSignature> = uploads.iter().map(|u| u.sig.clone()).collect();
            let data_list: Vec<Vec<u8>> = uploads.iter().map(|u| u.data.clone()).collect();
            let agg = aggregate(&sigs, group).expect("non-empty batch");
            aggregate_bytes = wire::encode_aggregate(&agg, group).len();
            let ok = aggregate_verify(
                sys,
                &records,
                &delta,
                &data_list,
                &agg,
                QiSource::Cached,
                Some(&batch_counter),
            )
            .expect("shape checked above");
            if !ok {
                for upload in &uploads {
                    let fine = verify_individual(
                        sys,
                        &records[upload.terminal],
                        &delta,
                        &upload.data,
                        &upload.sig,
                        Some(&localization_counter),
                    );
                    if !fine {
                        culprits.push(upload.terminal);
                    }
                }
            }
            ok
        };

        for (i, original) in replaced {
            records[i] = original;
        }

        reports.push(RoundReport {
            round,
            delta: delta_bytes,
            verdict,
            shape_error,
            culprits,
            broadcast,
            uplink,
            aggregate_bytes,
            batch_ops: batch_counter.snapshot(),
            localization_ops: localization_counter.snapshot(),
        });
    }
    Ok(reports)
}

/// Convenience wrapper: runs setup and the simulation from one seed.
pub fn run_seeded(
    group: &vdas_algebra::GroupParams,
    config: &SimConfig,
) -> Result<Vec<RoundReport>, SimError> {
    let (sys, msk) = setup(group, &config.rng_seed);
    run_simulation(&sys, &msk, config)
}

pub fn summarize(reports: &[RoundReport]) -> Result<SimSummary, SimError> {
    if reports.is_empty() {
        return Err(SimError::EmptyReportList);
    }
    let rounds = reports.len();
    let accepted = reports.iter().filter(|r| r.verdict).count();
    let pairings: u64 = reports.iter().map(|r| r.batch_ops.pairings).sum();
    let uplink_bytes: u64 = reports.iter().map(|r| r.uplink.bytes).sum();
    let aggregate_bytes = reports
        .iter()
        .map(|r| r.aggregate_bytes)
        .max()
        .unwrap_or(0);
    Ok(SimSummary {
        rounds,
        acceptance_rate: accepted as f64 / rounds as f64,
        mean_batch_pairings: pairings as f64 / rounds as f64,
        mean_uplink_bytes: uplink_bytes as f64 / rounds as f64,
        aggregate_bytes,
    })
}

/// One CSV row per round.
pub fn reports_to_csv(reports: &[RoundReport]) -> String {
    let mut out = String::from(
        "round,delta,verdict,shape_error,culprits,broadcast_msgs,broadcast_bytes,\
         uplink_msgs,uplink_bytes,aggregate_bytes,batch_pairings,batch_scalar_mults,\
         batch_map_hashes,localization_pairings\n",
    );
    for r in reports {
        let culprits = r
            .culprits
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(";");
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            r.round,
            hex::encode(&r.delta),
            r.verdict,
            r.shape_error,
            culprits,
            r.broadcast.messages,
            r.broadcast.bytes,
            r.uplink.messages,
            r.uplink.bytes,
            r.aggregate_bytes,
            r.batch_ops.pairings,
            r.batch_ops.scalar_mults,
            r.batch_ops.map_hashes,
            r.localization_ops.pairings,
        ));
    }
    out
}

/// Human-oriented structured text, one block per round.
pub fn reports_to_text(reports: &[RoundReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&format!(
            "round={} delta={} verdict={}{}\n",
            r.round,
            hex::encode(&r.delta),
            if r.verdict { "accept" } else { "reject" },
            if r.shape_error { " (shape error)" } else { "" },
        ));
        if !r.culprits.is_empty() {
            let list = r
                .culprits
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",");
            out.push_str(&format!("  culprits: {list}\n"));
        }
        out.push_str(&format!(
            "  broadcast {}msg/{}B uplink {}msg/{}B aggregate {}B\n",
            r.broadcast.messages,
            r.broadcast.bytes,
            r.uplink.messages,
            r.uplink.bytes,
            r.aggregate_bytes,
        ));
        out.push_str(&format!(
            "  batch ops: {}P {}S {}H; localization: {}P\n",
            r.batch_ops.pairings,
            r.batch_ops.scalar_mults,
            r.batch_ops.map_hashes,
            r.localization_ops.pairings,
        ));
    }
    out
}
