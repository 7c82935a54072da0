use std::cell::OnceCell;

use crate::constructions::{build_l, build_r, build_star, build_t, ConstructionBundle, Side, StarKind};
use crate::error::Result;
use crate::green::GreensStructure;
use crate::properties::non_regular_element;
use crate::semigroup::FiniteSemigroup;

/// One semigroup under verification, with its constructions built on first use.
pub struct Member<'a> {
    pub s: &'a FiniteSemigroup,
    pub seed: u64,
    g: OnceCell<GreensStructure>,
    covered: OnceCell<bool>,
    regular: OnceCell<bool>,
    t: OnceCell<ConstructionBundle>,
    t_greens: OnceCell<GreensStructure>,
    r: OnceCell<ConstructionBundle>,
    l: OnceCell<ConstructionBundle>,
    t_star: OnceCell<ConstructionBundle>,
    r_star: OnceCell<ConstructionBundle>,
}

fn cached<T>(cell: &OnceCell<T>, build: impl FnOnce() -> Result<T>) -> Result<&T> {
    if let Some(v) = cell.get() {
        return Ok(v);
    }
    let v = build()?;
    Ok(cell.get_or_init(|| v))
}

impl<'a> Member<'a> {
    pub fn new(s: &'a FiniteSemigroup, seed: u64) -> Self {
        Member {
            s,
            seed,
            g: OnceCell::new(),
            covered: OnceCell::new(),
            regular: OnceCell::new(),
            t: OnceCell::new(),
            t_greens: OnceCell::new(),
            r: OnceCell::new(),
            l: OnceCell::new(),
            t_star: OnceCell::new(),
            r_star: OnceCell::new(),
        }
    }

    pub fn greens(&self) -> &GreensStructure {
        self.g.get_or_init(|| GreensStructure::compute(self.s))
    }

    pub fn covered(&self) -> bool {
        *self.covered.get_or_init(|| self.s.is_idempotent_covered().holds())
    }

    pub fn regular(&self) -> bool {
        *self.regular.get_or_init(|| non_regular_element(self.s).is_none())
    }

    pub fn has_zero(&self) -> bool {
        self.s.zero().is_some()
    }

    /// `T(S)`; callers check `covered` first.
    pub fn t(&self) -> Result<&ConstructionBundle> {
        cached(&self.t, || build_t(self.s))
    }

    pub fn t_greens(&self) -> Result<&GreensStructure> {
        let t = self.t()?;
        Ok(self.t_greens.get_or_init(|| GreensStructure::compute(&t.result)))
    }

    /// `R(S)`; callers check `regular` first.
    pub fn r(&self) -> Result<&ConstructionBundle> {
        cached(&self.r, || build_r(self.s, Side::Right))
    }

    pub fn l(&self) -> Result<&ConstructionBundle> {
        cached(&self.l, || build_l(self.s))
    }

    pub fn t_star(&self) -> Result<&ConstructionBundle> {
        cached(&self.t_star, || build_star(self.s, StarKind::Tstar))
    }

    pub fn r_star(&self) -> Result<&ConstructionBundle> {
        cached(&self.r_star, || build_star(self.s, StarKind::Rstar))
    }

    /// Sampler seed for this member: the run seed mixed with the table.
    pub fn sample_seed(&self) -> u64 {
        self.s.table().iter().fold(self.seed ^ 0xcbf2_9ce4_8422_2325, |h, &x| {
            (h ^ x as u64).wrapping_mul(0x0100_0000_01b3)
        })
    }
}
