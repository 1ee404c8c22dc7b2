//! Scripted attack batteries for the two CL-PKC adversary types, plus the
//! bit-flip battery from the protocol tests.

use rand::RngCore;
use vdas_algebra::{point_mul, random_nonzero_scalar, seeded_rng};
use vdas_core::{
    register, sign, verify_individual, Identity, IndividualSignature, MasterKey, StateInfo,
    SystemParams,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AttackKind {
    /// Type-I style: swap in a fresh public key without re-signing.
    ReplacePubkey,
    /// Type-II style: master-key holder guesses V for a terminal whose
    /// secret value it does not know.
    ForgeRandomV,
    /// Flip one data bit after signing.
    FlipData,
    /// Verify under a different session string.
    ReuseOldDelta,
}

impl AttackKind {
    pub fn name(self) -> &'static str {
        match self {
            AttackKind::ReplacePubkey => "replace-pubkey",
            AttackKind::ForgeRandomV => "forge-random-v",
            AttackKind::FlipData => "flip-data",
            AttackKind::ReuseOldDelta => "reuse-old-delta",
        }
    }

    pub const ALL: [AttackKind; 4] = [
        AttackKind::ReplacePubkey,
        AttackKind::ForgeRandomV,
        AttackKind::FlipData,
        AttackKind::ReuseOldDelta,
    ];
}

#[derive(Debug, Clone)]
pub struct TamperConfig {
    pub attacks: Vec<AttackKind>,
    pub trials_per_attack: u64,
    pub seed: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialLine {
    pub attack: &'static str,
    pub trial: u64,
    pub accepted: bool,
}

#[derive(Debug, Clone, Default)]
pub struct TamperReport {
    pub lines: Vec<TrialLine>,
}

impl TamperReport {
    pub fn false_accepts(&self) -> usize {
        self.lines.iter().filter(|l| l.accepted).count()
    }

    pub fn total(&self) -> usize {
        self.lines.len()
    }

    /// One line per trial plus the summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            out.push_str(&format!(
                "{} trial={} verdict={}\n",
                line.attack,
                line.trial,
                if line.accepted { "ACCEPT" } else { "reject" }
            ));
        }
        out.push_str(&format!(
            "false_accepts={}/{}\n",
            self.false_accepts(),
            self.total()
        ));
        out
    }
}

/// Runs every configured attack battery against freshly registered
/// terminals. Honest verification always uses the data center's view
/// (registration records), so every accept line is a genuine forgery.
pub fn run_tamper_suite(
    sys: &SystemParams,
    msk: &MasterKey,
    config: &TamperConfig,
) -> TamperReport {
    let mut report = TamperReport::default();
    let group = &sys.group;
    for attack in &config.attacks {
        let mut rng = seeded_rng("tamper-suite", &[&config.seed, attack.name().as_bytes()].concat());
        for trial in 0..config.trials_per_attack {
            let id = Identity::new(format!("{}-{trial}", attack.name()).into_bytes()).unwrap();
            let mut reg_seed = config.seed.clone();
            reg_seed.extend_from_slice(&trial.to_be_bytes());
            let (keys, mut record) = register(msk, sys, id, &reg_seed);
            let delta = StateInfo::new(format!("session-{trial}").into_bytes()).unwrap();
            let mut data = vec![0u8; 32];
            rng.fill_bytes(&mut data);
            let sig = sign(sys, &keys, &delta, &data, &reg_seed, None);

            let accepted = match attack {
                AttackKind::ReplacePubkey => {
                    let x_new = random_nonzero_scalar(&mut rng, group);
                    record.ppub = point_mul(&x_new, &group.generator, group, None);
                    verify_individual(sys, &record, &delta, &data, &sig, None)
                }
                AttackKind::ForgeRandomV => {
                    // the adversary knows D = sQ but not x; its best shot
                    // at V is a random group element
                    let guess = IndividualSignature {
                        r: sig.r.clone(),
                        v: point_mul(
                            &random_nonzero_scalar(&mut rng, group),
                            &group.generator,
                            group,
                            None,
                        ),
                    };
                    verify_individual(sys, &record, &delta, &data, &guess, None)
                }
                AttackKind::FlipData => {
                    let bit = (rng.next_u32() as usize) % (data.len() * 8);
                    let mut tampered = data.clone();
                    tampered[bit / 8] ^= 1 << (bit % 8);
                    verify_individual(sys, &record, &delta, &tampered, &sig, None)
                }
                AttackKind::ReuseOldDelta => {
                    let old = StateInfo::new(format!("stale-{trial}").into_bytes()).unwrap();
                    verify_individual(sys, &record, &old, &data, &sig, None)
                }
            };
            report.lines.push(TrialLine {
                attack: attack.name(),
                trial,
                accepted,
            });
        }
    }
    report
}
