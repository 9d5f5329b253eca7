//! The characteristic-2 genus-7 experiment: the same nodal-septic recipe
//! run over GF(16) and over GF(1009), with the middle syzygy space
//! vanishing in odd characteristic and persistently nonzero in
//! characteristic 2.

use std::time::Instant;

use curve_forge::find_entry;
use exact_core::{BinaryField, PrimeField, SplitMix64};
use koszul_engine::{betti_table, BettiTable};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::CheckError;
use crate::identities::{duality_check, hilbert_identity_check};
use crate::report::CheckReport;

/// One build of the genus-7 recipe over one field.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TrialRow {
    pub trial: usize,
    pub field: String,
    pub beta_3_1: usize,
    pub beta_2_2: usize,
    pub seconds: f64,
}

impl TrialRow {
    /// CSV rendering (header produced by [`trial_csv_header`]).
    pub fn to_csv_line(&self) -> String {
        format!(
            "{},{},{},{},{:.3}",
            self.trial, self.field, self.beta_3_1, self.beta_2_2, self.seconds
        )
    }
}

/// Header line matching [`TrialRow::to_csv_line`].
pub fn trial_csv_header() -> &'static str {
    "trial,field,beta_3_1,beta_2_2,seconds"
}

fn run_trial(
    trial: usize,
    seed: u64,
) -> Result<((TrialRow, BettiTable), (TrialRow, BettiTable)), CheckError> {
    // Independent per-trial stream, so trials can run in any order (or in
    // parallel) without perturbing each other.
    let trial_seed = SplitMix64::new(seed ^ trial as u64).next_u64();

    let gf16 = BinaryField::with_default_modulus(4).expect("GF(16) exists");
    let char2_entry = find_entry("g7_char2")?;
    let started = Instant::now();
    let built = curve_forge::build_entry(&gf16, char2_entry, trial_seed, 4)?;
    let char2_table = betti_table(&built.quotient)?;
    let char2_row = TrialRow {
        trial,
        field: char2_entry.default_field.to_string(),
        beta_3_1: char2_table.entry(3, 1),
        beta_2_2: char2_table.entry(2, 2),
        seconds: started.elapsed().as_secs_f64(),
    };

    let gf1009 = PrimeField::new(1009).expect("1009 is prime");
    let odd_entry = find_entry("g7_generic")?;
    let started = Instant::now();
    let built = curve_forge::build_entry(&gf1009, odd_entry, trial_seed, 4)?;
    let odd_table = betti_table(&built.quotient)?;
    let odd_row = TrialRow {
        trial,
        field: odd_entry.default_field.to_string(),
        beta_3_1: odd_table.entry(3, 1),
        beta_2_2: odd_table.entry(2, 2),
        seconds: started.elapsed().as_secs_f64(),
    };

    Ok(((char2_row, char2_table), (odd_row, odd_table)))
}

/// Run `trials` independent genus-7 builds over GF(16) and GF(1009) each.
///
/// Passes iff every characteristic-2 trial has `β[3][1] >= 1` with
/// `β[3][1] = β[2][2]` and a table satisfying duality and the Hilbert
/// identity, while every odd-characteristic trial has `β[3][1] = 0`.
/// Construction failures propagate as errors rather than verdicts.
pub fn char2_g7_experiment(
    trials: usize,
    seed: u64,
) -> Result<(CheckReport, Vec<TrialRow>), CheckError> {
    assert!(trials >= 1, "the experiment needs at least one trial");

    let outcomes: Vec<_> = (0..trials)
        .into_par_iter()
        .map(|trial| run_trial(trial, seed))
        .collect::<Result<_, _>>()?;

    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for ((char2_row, char2_table), (odd_row, odd_table)) in outcomes {
        let trial = char2_row.trial;
        if char2_row.beta_3_1 == 0 {
            failures.push(format!("trial {trial}: GF(16) table has beta_3_1 = 0"));
        }
        if char2_row.beta_3_1 != char2_row.beta_2_2 {
            failures.push(format!(
                "trial {trial}: GF(16) table has beta_3_1 = {} but beta_2_2 = {}",
                char2_row.beta_3_1, char2_row.beta_2_2
            ));
        }
        for table in [&char2_table, &odd_table] {
            if !duality_check(table)?.passed {
                failures.push(format!("trial {trial}: duality fails over {}", table.field()));
            }
            if !hilbert_identity_check(table, 7)?.passed {
                failures.push(format!(
                    "trial {trial}: hilbert identity fails over {}",
                    table.field()
                ));
            }
        }
        if odd_row.beta_3_1 != 0 {
            failures.push(format!(
                "trial {trial}: GF(1009) table has beta_3_1 = {}",
                odd_row.beta_3_1
            ));
        }
        rows.push(char2_row);
        rows.push(odd_row);
    }

    let passed = failures.is_empty();
    let report = CheckReport::new(
        "char2_g7",
        passed,
        serde_json::json!({
            "trials": trials,
            "seed": seed,
            "rows": rows,
            "failures": failures,
        }),
    );
    Ok((report, rows))
}
