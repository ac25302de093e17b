//! Dense two-phase simplex over any [`Scalar`], with Bland's pivot rule.
//!
//! Problems are minimizations. Every row gets an artificial column; phase 1
//! drives the artificials to zero, phase 2 optimizes the real objective with
//! the artificial columns frozen. The frozen columns still hold `B⁻¹`, which
//! is where the duals are read from.

use crate::error::LpError;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarKind {
    Free,
    NonNegative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowKind {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Constraint<S> {
    pub coeffs: Vec<S>,
    pub kind: RowKind,
    pub rhs: S,
}

/// `minimize objective·x` subject to `rows`.
#[derive(Clone, Debug, PartialEq)]
pub struct LPProblem<S> {
    pub objective: Vec<S>,
    pub vars: Vec<VarKind>,
    pub rows: Vec<Constraint<S>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LPSolution<S> {
    pub x: Vec<S>,
    pub value: S,
    /// Shadow prices `∂value/∂rhs`, one per row. Nonnegative on `Ge` rows
    /// and nonpositive on `Le` rows.
    pub duals: Vec<S>,
    /// Rows satisfied with equality at `x`.
    pub tight: Vec<bool>,
    /// Basic tableau column per row (structural columns first, then slacks,
    /// then artificials).
    pub basis: Vec<usize>,
}

impl<S: Scalar> LPProblem<S> {
    pub fn new(objective: Vec<S>, vars: Vec<VarKind>) -> Self {
        LPProblem {
            objective,
            vars,
            rows: Vec::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn push(&mut self, coeffs: Vec<S>, kind: RowKind, rhs: S) {
        self.rows.push(Constraint { coeffs, kind, rhs });
    }

    pub fn add_le(&mut self, coeffs: Vec<S>, rhs: S) {
        self.push(coeffs, RowKind::Le, rhs);
    }

    pub fn add_ge(&mut self, coeffs: Vec<S>, rhs: S) {
        self.push(coeffs, RowKind::Ge, rhs);
    }

    pub fn add_eq(&mut self, coeffs: Vec<S>, rhs: S) {
        self.push(coeffs, RowKind::Eq, rhs);
    }

    fn validate(&self) -> Result<(), LpError> {
        let n = self.vars.len();
        if self.objective.len() != n {
            return Err(LpError::Malformed(format!(
                "objective has {} entries for {n} variables",
                self.objective.len()
            )));
        }
        if let Some((i, r)) = self.rows.iter().enumerate().find(|(_, r)| r.coeffs.len() != n) {
            return Err(LpError::Malformed(format!(
                "row {i} has {} coefficients for {n} variables",
                r.coeffs.len()
            )));
        }
        Ok(())
    }
}

struct Tableau<S> {
    /// `m` rows of `ncols + 1` entries, the last being the right-hand side.
    t: Vec<Vec<S>>,
    basis: Vec<usize>,
    ncols: usize,
    /// First artificial column.
    art: usize,
}

impl<S: Scalar> Tableau<S> {
    fn rhs(&self, i: usize) -> &S {
        &self.t[i][self.ncols]
    }

    fn reduced_costs(&self, cost: &[S]) -> Vec<S> {
        (0..self.ncols)
            .map(|j| {
                self.basis.iter().enumerate().fold(cost[j].clone(), |acc, (i, &b)| {
                    if cost[b].is_zero_s() {
                        acc
                    } else {
                        acc - cost[b].clone() * self.t[i][j].clone()
                    }
                })
            })
            .collect()
    }

    fn objective(&self, cost: &[S]) -> S {
        self.basis
            .iter()
            .enumerate()
            .fold(S::zero(), |acc, (i, &b)| acc + cost[b].clone() * self.rhs(i).clone())
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.t[r][c].clone();
        for v in self.t[r].iter_mut() {
            *v = v.clone() / p.clone();
        }
        let pivot_row = self.t[r].clone();
        for (i, row) in self.t.iter_mut().enumerate() {
            if i == r || row[c].is_zero_s() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(pivot_row.iter()) {
                if !pv.is_zero_s() {
                    *v = v.clone() - f.clone() * pv.clone();
                }
            }
            row[c] = S::zero();
            // rounding residue on a degenerate row would break Bland's ties
            let last = row.len() - 1;
            if row[last].is_zero_s() {
                row[last] = S::zero();
            }
        }
        self.basis[r] = c;
    }

    /// Bland's rule simplex on columns `< allowed`.
    fn optimize(&mut self, cost: &[S], allowed: usize) -> Result<(), LpError> {
        let limit = 50 * (self.t.len() + self.ncols);
        for _ in 0..limit {
            let rc = self.reduced_costs(cost);
            let Some(enter) = (0..allowed).find(|&j| rc[j].is_neg()) else {
                return Ok(());
            };
            let mut leave: Option<(usize, S)> = None;
            for i in 0..self.t.len() {
                let a = &self.t[i][enter];
                if !a.is_pos() {
                    continue;
                }
                let ratio = self.rhs(i).clone() / a.clone();
                leave = match leave {
                    None => Some((i, ratio)),
                    Some((k, best)) => match ratio.exact_cmp(&best) {
                        std::cmp::Ordering::Less => Some((i, ratio)),
                        std::cmp::Ordering::Equal if self.basis[i] < self.basis[k] => Some((i, ratio)),
                        _ => Some((k, best)),
                    },
                };
            }
            let Some((r, _)) = leave else {
                return Err(LpError::Unbounded);
            };
            self.pivot(r, enter);
        }
        Err(LpError::IterationLimit(limit))
    }
}

/// Solve a linear program; the pivot sequence is fully deterministic.
pub fn lp_solve<S: Scalar>(problem: &LPProblem<S>) -> Result<LPSolution<S>, LpError> {
    problem.validate()?;
    let m = problem.rows.len();

    // structural columns
    let mut col_of = Vec::with_capacity(problem.nvars());
    let mut nstruct = 0;
    for v in &problem.vars {
        col_of.push(nstruct);
        nstruct += match v {
            VarKind::Free => 2,
            VarKind::NonNegative => 1,
        };
    }
    let nslack = problem.rows.iter().filter(|r| r.kind != RowKind::Eq).count();
    let art = nstruct + nslack;
    let ncols = art + m;

    let mut sigma = Vec::with_capacity(m);
    let mut t = Vec::with_capacity(m);
    let mut slack = nstruct;
    for (i, row) in problem.rows.iter().enumerate() {
        let flip = row.rhs.is_neg();
        sigma.push(flip);
        let sg = |v: S| if flip { -v } else { v };
        let mut r = vec![S::zero(); ncols + 1];
        for (j, a) in row.coeffs.iter().enumerate() {
            r[col_of[j]] = sg(a.clone());
            if problem.vars[j] == VarKind::Free {
                r[col_of[j] + 1] = sg(-a.clone());
            }
        }
        match row.kind {
            RowKind::Le => {
                r[slack] = sg(S::one());
                slack += 1;
            }
            RowKind::Ge => {
                r[slack] = sg(-S::one());
                slack += 1;
            }
            RowKind::Eq => {}
        }
        r[art + i] = S::one();
        r[ncols] = sg(row.rhs.clone());
        t.push(r);
    }
    let mut tab = Tableau {
        t,
        basis: (art..art + m).collect(),
        ncols,
        art,
    };

    // phase 1
    let mut cost1 = vec![S::zero(); ncols];
    for c in cost1.iter_mut().skip(art) {
        *c = S::one();
    }
    tab.optimize(&cost1, art)?;
    if tab.objective(&cost1).is_pos() {
        return Err(LpError::Infeasible);
    }
    for i in 0..m {
        if tab.basis[i] >= tab.art {
            if let Some(j) = (0..tab.art).find(|&j| !tab.t[i][j].is_zero_s()) {
                tab.pivot(i, j);
            }
        }
    }

    // phase 2
    let mut cost2 = vec![S::zero(); ncols];
    for (j, c) in problem.objective.iter().enumerate() {
        cost2[col_of[j]] = c.clone();
        if problem.vars[j] == VarKind::Free {
            cost2[col_of[j] + 1] = -c.clone();
        }
    }
    tab.optimize(&cost2, tab.art)?;

    let mut colval = vec![S::zero(); ncols];
    for (i, &b) in tab.basis.iter().enumerate() {
        colval[b] = tab.rhs(i).clone();
    }
    let x: Vec<S> = problem
        .vars
        .iter()
        .enumerate()
        .map(|(j, v)| match v {
            VarKind::Free => colval[col_of[j]].clone() - colval[col_of[j] + 1].clone(),
            VarKind::NonNegative => colval[col_of[j]].clone(),
        })
        .collect();
    let value = dot(&problem.objective, &x);
    let rc = tab.reduced_costs(&cost2);
    let duals = (0..m)
        .map(|i| {
            let y = -rc[tab.art + i].clone();
            if sigma[i] {
                -y
            } else {
                y
            }
        })
        .collect();
    let tight = problem
        .rows
        .iter()
        .map(|r| dot(&r.coeffs, &x).eq_s(&r.rhs))
        .collect();
    Ok(LPSolution {
        x,
        value,
        duals,
        tight,
        basis: tab.basis,
    })
}

pub(crate) fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter()
        .zip(b)
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Lexicographic minimization: minimize `problem.objective`, then each of
/// `secondary` in turn while keeping all earlier objectives at their optima.
/// Returns the primary solution (whose duals certify the primary optimum)
/// and the lexicographically minimal point.
pub fn lp_lexmin<S: Scalar>(
    problem: &LPProblem<S>,
    secondary: &[Vec<S>],
) -> Result<(LPSolution<S>, Vec<S>), LpError> {
    let first = lp_solve(problem)?;
    let mut p = problem.clone();
    let mut last = first.clone();
    for obj in secondary {
        p.add_le(p.objective.clone(), last.value.clone());
        p.objective = obj.clone();
        last = lp_solve(&p)?;
    }
    Ok((first, last.x))
}
