//! Named realizers selectable at runtime, and the dispatching `construct_any`.

use crate::construct::{
    construct_balanced, construct_division, construct_gk_general, construct_k3, construct_k4,
    finish_checked, general_threshold, max_balanced_colors, special_coloring, star_partition_for,
    two_color_fill,
};
use crate::error::{ConstructError, NotConstructedReason};
use crate::model::{Coloring, DivisionParams, Distribution, VerdictTag};
use crate::oracle::{search_with, SearchOptions};
use crate::verify::check_necessary;

/// A construction strategy for a target distribution.
pub trait Realizer: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    /// `Err(reason)` when the strategy does not cover `d`.
    fn applies(&self, d: &Distribution) -> Result<(), String>;
    fn realize(&self, d: &Distribution) -> Result<Coloring, ConstructError>;
}

/// True inside the ranges where every distribution is known to be realizable.
pub fn guaranteed(n: usize, k: usize) -> bool {
    match k {
        0 => false,
        1 | 2 => true,
        3 => n >= 5,
        4 => n >= 8,
        _ => n >= general_threshold(k),
    }
}

/// Realizes `d` by the covering construction, or `None` outside the
/// guaranteed ranges.
pub(crate) fn realize_guaranteed(d: &Distribution) -> Option<Result<Coloring, ConstructError>> {
    if !guaranteed(d.n(), d.k()) {
        return None;
    }
    Some(match d.k() {
        1 | 2 => two_color_fill(d),
        3 => construct_k3(d),
        4 => construct_k4(d),
        _ => construct_gk_general(d),
    })
}

fn not_constructed(reason: NotConstructedReason) -> ConstructError {
    ConstructError::NotConstructed(reason)
}

fn search_coloring(d: &Distribution, opts: &SearchOptions) -> Result<Coloring, ConstructError> {
    let v = search_with(d, opts);
    match v.tag {
        VerdictTag::Feasible => finish_checked(v.witness.expect("feasible verdicts carry a witness"), d),
        VerdictTag::Infeasible => Err(not_constructed(NotConstructedReason::Infeasible)),
        VerdictTag::Unknown => Err(not_constructed(NotConstructedReason::Unknown)),
    }
}

/// Largest `n` for which the best-effort path falls back to exhaustive search.
pub const ORACLE_FALLBACK_MAX_N: usize = 8;

/// Realizes `d` if possible. Inside the guaranteed ranges this always
/// succeeds; elsewhere it tries the necessary condition, a star partition and,
/// for small `n`, exhaustive search.
pub fn construct_any(d: &Distribution) -> Result<Coloring, ConstructError> {
    construct_any_with(d, &SearchOptions::default())
}

pub fn construct_any_with(d: &Distribution, opts: &SearchOptions) -> Result<Coloring, ConstructError> {
    if let Some(done) = realize_guaranteed(d) {
        return done;
    }
    if let Err(fail) = check_necessary(d) {
        return Err(not_constructed(NotConstructedReason::NecessaryCondition(fail.ell)));
    }
    match star_partition_for(d) {
        Ok(sp) => return finish_checked(special_coloring(&sp), d),
        Err(ConstructError::NotFound | ConstructError::BudgetExceeded) => {}
        Err(e) => return Err(e),
    }
    if d.n() <= ORACLE_FALLBACK_MAX_N {
        return search_coloring(d, opts);
    }
    Err(not_constructed(NotConstructedReason::FallbackExhausted))
}

/// Reads `d` as `k` classes of size `p` plus at most one class of size `q`.
pub fn division_params_of(d: &Distribution) -> Option<DivisionParams> {
    let sizes = d.sizes();
    let mut values = sizes.to_vec();
    values.dedup();
    values.into_iter().find_map(|p| {
        let k = sizes.iter().filter(|&&e| e == p).count();
        let q = match sizes.len() - k {
            0 => 0,
            1 => *sizes.iter().find(|&&e| e != p)?,
            _ => return None,
        };
        DivisionParams::new(d.n(), k, p, q).ok()
    })
}

struct Auto;
struct TwoColor;
struct PeelK3;
struct PeelK4;
struct General;
struct Division;
struct Balanced;
struct Special;
struct Oracle;

impl Realizer for Auto {
    fn name(&self) -> &'static str {
        "auto"
    }
    fn summary(&self) -> &'static str {
        "covering construction when guaranteed, otherwise best effort"
    }
    fn applies(&self, _: &Distribution) -> Result<(), String> {
        Ok(())
    }
    fn realize(&self, d: &Distribution) -> Result<Coloring, ConstructError> {
        construct_any(d)
    }
}

impl Realizer for TwoColor {
    fn name(&self) -> &'static str {
        "two-color"
    }
    fn summary(&self) -> &'static str {
        "lexicographic fill for at most two classes"
    }
    fn applies(&self, d: &Distribution) -> Result<(), String> {
        if d.k() <= 2 {
            Ok(())
        } else {
            Err(format!("{} classes", d.k()))
        }
    }
    fn realize(&self, d: &Distribution) -> Result<Coloring, ConstructError> {
        two_color_fill(d)
    }
}

impl Realizer for PeelK3 {
    fn name(&self) -> &'static str {
        "peel-k3"
    }
    fn summary(&self) -> &'static str {
        "three classes, n >= 5: peel to K_5 and use the table"
    }
    fn applies(&self, d: &Distribution) -> Result<(), String> {
        if d.k() == 3 && d.n() >= 5 {
            Ok(())
        } else {
            Err("needs k = 3 and n >= 5".into())
        }
    }
    fn realize(&self, d: &Distribution) -> Result<Coloring, ConstructError> {
        construct_k3(d)
    }
}

impl Realizer for PeelK4 {
    fn name(&self) -> &'static str {
        "peel-k4"
    }
    fn summary(&self) -> &'static str {
        "four classes, n >= 8: peel to K_8 and use the case analysis"
    }
    fn applies(&self, d: &Distribution) -> Result<(), String> {
        if d.k() == 4 && d.n() >= 8 {
            Ok(())
        } else {
            Err("needs k = 4 and n >= 8".into())
        }
    }
    fn realize(&self, d: &Distribution) -> Result<Coloring, ConstructError> {
        construct_k4(d)
    }
}

impl Realizer for General {
    fn name(&self) -> &'static str {
        "general"
    }
    fn summary(&self) -> &'static str {
        "k >= 3, n >= 8k^2+1: eliminate the smallest class and recurse"
    }
    fn applies(&self, d: &Distribution) -> Result<(), String> {
        let k = d.k();
        if k >= 3 && d.n() >= general_threshold(k) {
            Ok(())
        } else {
            Err(format!("needs k >= 3 and n >= {}", general_threshold(k.max(3))))
        }
    }
    fn realize(&self, d: &Distribution) -> Result<Coloring, ConstructError> {
        construct_gk_general(d)
    }
}

impl Realizer for Division {
    fn name(&self) -> &'static str {
        "division"
    }
    fn summary(&self) -> &'static str {
        "k classes of size p >= n-1 plus one class of size q"
    }
    fn applies(&self, d: &Distribution) -> Result<(), String> {
        division_params_of(d)
            .map(|_| ())
            .ok_or_else(|| "not of the form k x p + q with p >= n-1".into())
    }
    fn realize(&self, d: &Distribution) -> Result<Coloring, ConstructError> {
        let params = division_params_of(d).ok_or_else(|| ConstructError::NotApplicable {
            strategy: self.name(),
            reason: "not a division instance".into(),
        })?;
        finish_checked(construct_division(&params)?, d)
    }
}

impl Realizer for Balanced {
    fn name(&self) -> &'static str {
        "balanced"
    }
    fn summary(&self) -> &'static str {
        "class sizes within one, k <= ceil(n/2)"
    }
    fn applies(&self, d: &Distribution) -> Result<(), String> {
        if !d.is_balanced() {
            Err("class sizes differ by more than one".into())
        } else if d.k() > max_balanced_colors(d.n()) {
            Err(format!("k exceeds {}", max_balanced_colors(d.n())))
        } else {
            Ok(())
        }
    }
    fn realize(&self, d: &Distribution) -> Result<Coloring, ConstructError> {
        finish_checked(construct_balanced(d.n(), d.k())?, d)
    }
}

impl Realizer for Special {
    fn name(&self) -> &'static str {
        "special"
    }
    fn summary(&self) -> &'static str {
        "search for a star partition with the given class sums"
    }
    fn applies(&self, _: &Distribution) -> Result<(), String> {
        Ok(())
    }
    fn realize(&self, d: &Distribution) -> Result<Coloring, ConstructError> {
        finish_checked(special_coloring(&star_partition_for(d)?), d)
    }
}

impl Realizer for Oracle {
    fn name(&self) -> &'static str {
        "oracle"
    }
    fn summary(&self) -> &'static str {
        "exhaustive search (small n)"
    }
    fn applies(&self, _: &Distribution) -> Result<(), String> {
        Ok(())
    }
    fn realize(&self, d: &Distribution) -> Result<Coloring, ConstructError> {
        search_coloring(d, &SearchOptions::default())
    }
}

/// Realizers by name.
pub struct Registry {
    entries: Vec<Box<dyn Realizer>>,
}

impl Default for Registry {
    fn default() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(Auto));
        r.register(Box::new(TwoColor));
        r.register(Box::new(PeelK3));
        r.register(Box::new(PeelK4));
        r.register(Box::new(General));
        r.register(Box::new(Division));
        r.register(Box::new(Balanced));
        r.register(Box::new(Special));
        r.register(Box::new(Oracle));
        r
    }
}

impl Registry {
    pub fn empty() -> Self {
        Self { entries: Vec::new() }
    }

    /// Adds a realizer, replacing any previous one with the same name.
    pub fn register(&mut self, r: Box<dyn Realizer>) {
        self.entries.retain(|e| e.name() != r.name());
        self.entries.push(r);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Realizer> {
        self.entries.iter().find(|e| e.name() == name).map(|e| e.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Realizer> {
        self.entries.iter().map(|e| e.as_ref())
    }

    /// Runs the named realizer after checking that it applies.
    pub fn realize(&self, name: &str, d: &Distribution) -> Result<Coloring, ConstructError> {
        let r = self
            .get(name)
            .ok_or_else(|| ConstructError::UnknownStrategy(name.to_string()))?;
        r.applies(d).map_err(|reason| ConstructError::NotApplicable {
            strategy: r.name(),
            reason,
        })?;
        r.realize(d)
    }
}

/// [`Registry::realize`] on the default registry.
pub fn construct_with(name: &str, d: &Distribution) -> Result<Coloring, ConstructError> {
    Registry::default().realize(name, d)
}
