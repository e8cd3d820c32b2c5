use alloc::vec::Vec;

use super::{Eigenvalue, SpectrumError, SpectrumReport, SpectrumSource};

pub const DEFAULT_CLUSTER_GAP: f64 = 1e-6;

/// Groups numeric eigenvalues into a multiset.
///
/// Consecutive values (after sorting) closer than `gap` share a cluster.
/// A cluster whose mean is within `gap` of an integer is reported as that
/// integer. Neighbours whose distance falls in `[gap, 10·gap)` are too close
/// to call and produce `AmbiguousClustering`.
pub fn cluster_multiplicities(values: &[f64], gap: f64) -> Result<SpectrumReport, SpectrumError> {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut clusters: Vec<Vec<f64>> = Vec::new();
    for &x in &sorted {
        match clusters.last_mut() {
            Some(c) => {
                let prev = *c.last().expect("clusters are nonempty");
                let d = x - prev;
                if d < gap {
                    c.push(x);
                } else if d < 10.0 * gap {
                    return Err(SpectrumError::AmbiguousClustering {
                        left: prev,
                        right: x,
                    });
                } else {
                    clusters.push(alloc::vec![x]);
                }
            }
            None => clusters.push(alloc::vec![x]),
        }
    }
    let mut pairs: Vec<(Eigenvalue, usize)> = Vec::new();
    for c in clusters {
        let mean = c.iter().sum::<f64>() / c.len() as f64;
        let rounded = libm::round(mean);
        let value = if libm::fabs(mean - rounded) < gap && rounded >= 0.0 {
            Eigenvalue::Exact(rounded as u64)
        } else {
            Eigenvalue::Approx(mean)
        };
        match pairs.last_mut() {
            Some((last, m)) if *last == value => *m += c.len(),
            _ => pairs.push((value, c.len())),
        }
    }
    Ok(SpectrumReport {
        source: SpectrumSource::Numeric,
        pairs,
    })
}
