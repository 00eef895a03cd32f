//! Eigenvalue lists with multiplicity grouping, and exact closed-form
//! H-spectra for the graph families that admit them.

use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

/// Default absolute gap below which two sorted eigenvalues are considered
/// one repeated value.
pub const DEFAULT_TOL_GROUP: f64 = 1e-8;
/// Default absolute threshold for treating an eigenvalue as zero. Looser
/// than the grouping tolerance: rank boundaries accumulate more error.
pub const DEFAULT_TOL_ZERO: f64 = 1e-7;

/// A descending eigenvalue list together with its tolerance-clustered
/// multiplicity groups.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    groups: Vec<(f64, usize)>,
    tol_group: f64,
}

impl Spectrum {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `(value, multiplicity)` pairs, descending by value; the value is the
    /// mean of the group's members.
    pub fn groups(&self) -> &[(f64, usize)] {
        &self.groups
    }

    pub fn tol_group(&self) -> f64 {
        self.tol_group
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn largest(&self) -> Option<f64> {
        self.values.first().copied()
    }

    pub fn smallest(&self) -> Option<f64> {
        self.values.last().copied()
    }

    pub fn count_at_least(&self, threshold: f64) -> usize {
        self.values.iter().take_while(|&&v| v >= threshold).count()
    }

    /// Values with `|v| > tol_zero`, still descending.
    pub fn nonzero_values(&self, tol_zero: f64) -> Vec<f64> {
        self.values.iter().copied().filter(|v| libm::fabs(*v) > tol_zero).collect()
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &(value, mult) in &self.groups {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{value}:{mult}")?;
        }
        Ok(())
    }
}

/// Greedy left-to-right clustering of a descending list: a gap of at least
/// `tol_group` between consecutive values starts a new group.
pub fn group_spectrum(values: &[f64], tol_group: f64) -> Spectrum {
    debug_assert!(values.windows(2).all(|w| w[0] >= w[1]), "values must be descending");
    let mut groups: Vec<(f64, usize)> = Vec::new();
    let mut start = 0;
    while start < values.len() {
        let mut end = start + 1;
        while end < values.len() && values[end - 1] - values[end] < tol_group {
            end += 1;
        }
        let mean = values[start..end].iter().sum::<f64>() / (end - start) as f64;
        groups.push((mean, end - start));
        start = end;
    }
    Spectrum { values: values.to_vec(), groups, tol_group }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete,
    Path,
    Cycle,
    Friendship,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Friendship => "friendship",
        }
    }

    /// Smallest parameter with a defined closed form.
    fn min_param(&self) -> usize {
        match self {
            Family::Complete | Family::Path => 2,
            Family::Cycle => 3,
            Family::Friendship => 1,
        }
    }

    /// The family member itself: K_n, P_n, C_n, or the cone over n disjoint
    /// edges.
    pub fn build(&self, n: usize) -> Result<crate::graph::Graph, FamilyError> {
        check_param(*self, n)?;
        Ok(match self {
            Family::Complete => crate::graph::Graph::complete(n),
            Family::Path => crate::graph::Graph::path(n),
            Family::Cycle => crate::graph::Graph::cycle(n),
            Family::Friendship => crate::graph::Graph::friendship(n),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyError {
    pub family: Family,
    pub n: usize,
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} family needs parameter >= {}, got {}",
            self.family.name(),
            self.family.min_param(),
            self.n
        )
    }
}

impl core::error::Error for FamilyError {}

fn check_param(family: Family, n: usize) -> Result<(), FamilyError> {
    if n < family.min_param() {
        return Err(FamilyError { family, n });
    }
    Ok(())
}

/// The exact H-spectrum of a family member, as a grouped spectrum at the
/// default tolerance:
///
/// - K_n: n with multiplicity n(n−1)/2.
/// - P_n: 2cos(jπ/n) + 2 for j = 1..n−1, all simple.
/// - C_3: (3, 3, 3).
/// - C_n, n ≥ 4 even: the nonzero Laplacian values 2 − 2cos(2πk/n) plus one 0.
/// - C_n, n ≥ 5 odd: 2cos(jπ/n) + 2 for odd j < n, each twice, plus one 0.
/// - friendship n: 2n+1 once, 3 with multiplicity 2n, 1 with multiplicity n−1.
pub fn closed_form_spectrum(family: Family, n: usize) -> Result<Spectrum, FamilyError> {
    check_param(family, n)?;
    let mut values: Vec<f64> = match family {
        Family::Complete => {
            let m = n * (n - 1) / 2;
            alloc::vec![n as f64; m]
        }
        Family::Path => {
            (1..n).map(|j| 2.0 * libm::cos(j as f64 * PI / n as f64) + 2.0).collect()
        }
        Family::Cycle => {
            if n == 3 {
                alloc::vec![3.0, 3.0, 3.0]
            } else if n % 2 == 0 {
                let mut v: Vec<f64> = (1..n)
                    .map(|k| 2.0 - 2.0 * libm::cos(2.0 * PI * k as f64 / n as f64))
                    .collect();
                v.push(0.0);
                v
            } else {
                let mut v = Vec::with_capacity(n);
                for j in (1..n).step_by(2) {
                    let x = 2.0 * libm::cos(j as f64 * PI / n as f64) + 2.0;
                    v.push(x);
                    v.push(x);
                }
                v.push(0.0);
                v
            }
        }
        Family::Friendship => {
            let mut v = alloc::vec![(2 * n + 1) as f64];
            v.extend(core::iter::repeat(3.0).take(2 * n));
            v.extend(core::iter::repeat(1.0).take(n - 1));
            v
        }
    };
    values.sort_unstable_by(|x, y| y.total_cmp(x));
    Ok(group_spectrum(&values, DEFAULT_TOL_GROUP))
}
