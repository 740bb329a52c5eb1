use serde::{Deserialize, Serialize};

use super::{count_pattern, MotzkinPath, Pattern, Step};

/// Pattern counts and positional statistics of a Motzkin path.
///
/// A plateau is a maximal flat run preceded by `U` and followed by `D`, or the
/// whole path when it is `F^k` (including `k = 0`). `plateau_lengths` lists
/// the positive plateaus in path order.
///
/// `mpl` is the minimum plateau length where a peak counts as a plateau of
/// length 0, which is the same as the smallest label on a left leaf of the
/// path's tree. So a path with a peak has `mpl = 0`, and `F^k` has `mpl = k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathStatistics {
    pub initial_flats: usize,
    #[serde(rename = "uu")]
    pub doublerises: usize,
    #[serde(rename = "ud")]
    pub peaks: usize,
    #[serde(rename = "du")]
    pub valleys: usize,
    #[serde(rename = "dd")]
    pub doublefalls: usize,
    pub ufu: usize,
    pub low_peaks: usize,
    pub final_descent: usize,
    pub ground_returns: usize,
    #[serde(rename = "first_height")]
    pub first_peak_plateau_height: Option<usize>,
    #[serde(rename = "plateaus")]
    pub plateau_lengths: Vec<usize>,
    pub mpl: usize,
}

/// The statistics that can be read off the tree side of the correspondence
/// directly; see [`crate::trees::tree_stats`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableStatistics {
    pub initial_flats: usize,
    pub doublerises: usize,
    pub peaks: usize,
    pub valleys: usize,
    pub doublefalls: usize,
    pub first_peak_plateau_height: Option<usize>,
    pub ground_returns: usize,
    pub plateau_lengths: Vec<usize>,
}

impl PathStatistics {
    pub fn table(&self) -> TableStatistics {
        TableStatistics {
            initial_flats: self.initial_flats,
            doublerises: self.doublerises,
            peaks: self.peaks,
            valleys: self.valleys,
            doublefalls: self.doublefalls,
            first_peak_plateau_height: self.first_peak_plateau_height,
            ground_returns: self.ground_returns,
            plateau_lengths: self.plateau_lengths.clone(),
        }
    }
}

pub fn statistics(p: &MotzkinPath) -> PathStatistics {
    let steps = p.steps();
    let n = steps.len();
    let initial_flats = steps.iter().take_while(|&&s| s == Step::F).count();
    let all_flat = initial_flats == n;

    let mut low_peaks = 0;
    let mut ground_returns = 0;
    let mut first_height = None;
    let mut plateau_lengths = Vec::new();
    let mut height = 0usize;
    // start index of the current flat run, if it was entered by an upstep
    let mut run_after_up: Option<usize> = None;
    for (i, &s) in steps.iter().enumerate() {
        match s {
            Step::U => {
                height += 1;
                run_after_up = Some(i + 1);
            }
            Step::F => {}
            Step::D => {
                if first_height.is_none() {
                    first_height = Some(height);
                }
                if let Some(start) = run_after_up.take() {
                    if i > start {
                        plateau_lengths.push(i - start);
                    }
                }
                height -= 1;
                if height == 0 {
                    ground_returns += 1;
                    if i > 0 && steps[i - 1] == Step::U {
                        low_peaks += 1;
                    }
                }
            }
        }
    }

    let peaks = count_pattern(steps, Pattern::UD);
    if all_flat {
        first_height = Some(0);
        plateau_lengths = vec![n];
    }
    let mpl = if all_flat {
        n
    } else if peaks > 0 {
        0
    } else {
        plateau_lengths.iter().copied().min().unwrap_or(0)
    };

    PathStatistics {
        initial_flats,
        doublerises: count_pattern(steps, Pattern::UU),
        peaks,
        valleys: count_pattern(steps, Pattern::DU),
        doublefalls: count_pattern(steps, Pattern::DD),
        ufu: count_pattern(steps, Pattern::UFU),
        low_peaks,
        final_descent: steps.iter().rev().take_while(|&&s| s == Step::D).count(),
        ground_returns,
        first_peak_plateau_height: first_height,
        plateau_lengths,
        mpl,
    }
}
