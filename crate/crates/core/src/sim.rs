//! Monte-Carlo channel simulation for the re-encoding decoder.
//!
//! Trial `i` draws from a ChaCha8 generator seeded with `seed` on stream `i`,
//! so a report depends only on the inputs and never on thread scheduling.

use std::fmt;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::code::Z2Z4Code;
use crate::decode::{decode_alternative, DecodeOutcome, PdSet};
use crate::encode::encode;
use crate::error::{Error, Result};
use crate::vector::BinaryVector;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ErrorModel {
    /// Uniformly random pattern of exactly this weight.
    Weight { weight: usize },
    /// Independent flips with probability `p`.
    Flip { p: f64 },
}

impl fmt::Display for ErrorModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ErrorModel::Weight { weight } => write!(f, "weight {}", weight),
            ErrorModel::Flip { p } => write!(f, "flip p={}", p),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimReport {
    pub trials: u64,
    pub error_model: ErrorModel,
    pub successes: u64,
    pub failures: u64,
    pub miscorrections: u64,
    pub seed: u64,
}

impl SimReport {
    pub fn success_rate(&self) -> f64 {
        self.successes as f64 / self.trials as f64
    }
}

impl fmt::Display for SimReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "trials          {}", self.trials)?;
        writeln!(f, "error model     {}", self.error_model)?;
        writeln!(f, "seed            {}", self.seed)?;
        writeln!(f, "successes       {}", self.successes)?;
        writeln!(f, "failures        {}", self.failures)?;
        writeln!(f, "miscorrections  {}", self.miscorrections)?;
        write!(f, "success rate    {:.6}", self.success_rate())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tally {
    Success,
    Failure,
    Miscorrection,
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn draw_error(rng: &mut ChaCha8Rng, n: usize, model: ErrorModel) -> BinaryVector {
    match model {
        ErrorModel::Weight { weight } => {
            let support: Vec<usize> = sample(rng, n, weight).into_iter().map(|i| i + 1).collect();
            BinaryVector::from_support(n, &support)
        }
        ErrorModel::Flip { p } => {
            let bits = (0..n).map(|_| u8::from(rng.gen_bool(p))).collect();
            BinaryVector::from_bits(bits).expect("binary")
        }
    }
}

fn run_trial(code: &Z2Z4Code, set: &PdSet, model: ErrorModel, seed: u64, trial: u64) -> Result<Tally> {
    let mut rng = trial_rng(seed, trial);
    let k = code.dimension();
    let info = BinaryVector::from_bits((0..k).map(|_| rng.gen_range(0..2u8)).collect()).expect("binary");
    let x = encode(&info, code)?;
    let e = draw_error(&mut rng, code.length(), model);
    let y = &x + &e;
    Ok(match decode_alternative(code, set, &y)? {
        DecodeOutcome::Decoded(d) if d.codeword == x => Tally::Success,
        DecodeOutcome::Decoded(_) => Tally::Miscorrection,
        DecodeOutcome::Failure => Tally::Failure,
    })
}

pub fn simulate(code: &Z2Z4Code, set: &PdSet, model: ErrorModel, trials: u64, seed: u64) -> Result<SimReport> {
    if trials == 0 {
        return Err(Error::InvalidArgument("at least one trial is required".into()));
    }
    match model {
        ErrorModel::Weight { weight } if weight > code.length() => {
            return Err(Error::InvalidArgument(format!("weight {} exceeds length {}", weight, code.length())));
        }
        ErrorModel::Flip { p } if !(0.0..=1.0).contains(&p) => {
            return Err(Error::InvalidArgument(format!("flip probability {} outside [0, 1]", p)));
        }
        _ => {}
    }
    // decoders memoize d lazily; compute once before fanning out
    code.error_capability()?;
    let tallies: Vec<Tally> =
        (0..trials).into_par_iter().map(|i| run_trial(code, set, model, seed, i)).collect::<Result<_>>()?;
    let count = |t: Tally| tallies.iter().filter(|&&x| x == t).count() as u64;
    Ok(SimReport {
        trials,
        error_model: model,
        successes: count(Tally::Success),
        failures: count(Tally::Failure),
        miscorrections: count(Tally::Miscorrection),
        seed,
    })
}
