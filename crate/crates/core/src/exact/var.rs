//! Process-wide variable registry.
//!
//! Variables are interned once and compared by registration index, which also
//! fixes the monomial order. `t` is always variable 0, followed by the usual
//! parameter names, so canonical forms do not depend on call order for them.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(pub(crate) u16);

struct Registry {
    names: Vec<String>,
    index: HashMap<String, u16>,
}

const PRESEEDED: &[&str] = &[
    "t", "r", "c", "a", "c2", "c0", "alpha2", "beta2", "b", "d", "e", "k", "rho", "z1", "z2",
    "z3", "z4", "q0", "q1", "q2", "q3", "q4",
];

fn registry() -> &'static RwLock<Registry> {
    static REG: OnceLock<RwLock<Registry>> = OnceLock::new();
    REG.get_or_init(|| {
        let mut reg = Registry {
            names: Vec::new(),
            index: HashMap::new(),
        };
        for name in PRESEEDED {
            let i = reg.names.len() as u16;
            reg.names.push((*name).to_string());
            reg.index.insert((*name).to_string(), i);
        }
        RwLock::new(reg)
    })
}

impl Var {
    /// Interns `name`, registering it if needed.
    pub fn new(name: &str) -> Var {
        if let Some(v) = Var::lookup(name) {
            return v;
        }
        let mut reg = registry().write().expect("variable registry poisoned");
        if let Some(&i) = reg.index.get(name) {
            return Var(i);
        }
        let i = u16::try_from(reg.names.len()).expect("too many variables");
        reg.names.push(name.to_string());
        reg.index.insert(name.to_string(), i);
        Var(i)
    }

    /// Returns the variable if `name` has been registered.
    pub fn lookup(name: &str) -> Option<Var> {
        let reg = registry().read().expect("variable registry poisoned");
        reg.index.get(name).map(|&i| Var(i))
    }

    /// The distinguished independent variable.
    pub fn t() -> Var {
        Var(0)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn name(self) -> String {
        let reg = registry().read().expect("variable registry poisoned");
        reg.names[self.0 as usize].clone()
    }

    pub(crate) fn from_index(i: usize) -> Var {
        Var(i as u16)
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_is_first() {
        assert_eq!(Var::t().index(), 0);
        assert_eq!(Var::new("t"), Var::t());
        assert_eq!(Var::t().name(), "t");
    }

    #[test]
    fn interning_is_stable() {
        let x = Var::new("some_fresh_name");
        assert_eq!(Var::new("some_fresh_name"), x);
        assert_eq!(Var::lookup("some_fresh_name"), Some(x));
        assert!(Var::lookup("never_registered_name").is_none());
    }
}
