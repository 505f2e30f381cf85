//! Aggregate classification of a complex.

use std::fmt;

use crate::checkers::cycles::is_locally_k_large;
use crate::checkers::presentation::is_simply_connected_bounded;
use crate::checkers::wheels::{sd2star_violation, PendantRule};
use crate::checkers::TriState;
use crate::complex::Complex;
use crate::error::Result;

#[derive(Clone, Copy, Debug)]
pub struct ClassifyOptions {
    /// Tietze move budget for the simple-connectedness check.
    pub effort: usize,
    pub pendant: PendantRule,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { effort: 10_000, pendant: PendantRule::Triangle }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub num_vertices: usize,
    pub f_vector: Vec<usize>,
    pub flag: TriState,
    pub loc5: TriState,
    pub loc6: TriState,
    pub sd2star: TriState,
    pub sd2star_links: TriState,
    pub simply_connected: TriState,
    pub systolic: TriState,
    pub weakly_systolic: TriState,
}

impl Report {
    /// Verdicts in record order.
    pub fn verdicts(&self) -> [(&'static str, TriState); 8] {
        [
            ("flag", self.flag),
            ("loc5", self.loc5),
            ("loc6", self.loc6),
            ("sd2star", self.sd2star),
            ("sd2star_links", self.sd2star_links),
            ("sc", self.simply_connected),
            ("systolic", self.systolic),
            ("weakly_systolic", self.weakly_systolic),
        ]
    }

    /// One `key=value` line per verdict.
    pub fn machine_record(&self) -> String {
        let mut out = String::new();
        for (k, v) in self.verdicts() {
            out.push_str(k);
            out.push('=');
            out.push_str(v.code());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fv: Vec<String> = self.f_vector.iter().map(usize::to_string).collect();
        writeln!(f, "vertices: {}  f-vector: [{}]", self.num_vertices, fv.join(", "))?;
        let labels = [
            "flag",
            "locally 5-large",
            "locally 6-large",
            "SD2*",
            "SD2* links",
            "simply connected",
            "systolic",
            "weakly systolic",
        ];
        for (label, (_, v)) in labels.iter().zip(self.verdicts()) {
            writeln!(f, "{label:<18} {v}")?;
        }
        Ok(())
    }
}

/// Runs every check. Largeness-type verdicts are `No` on non-flag complexes,
/// since those conditions include flagness; simple connectedness is `No` for
/// empty or disconnected complexes.
pub fn classify(x: &Complex, opts: &ClassifyOptions) -> Result<Report> {
    let flag = x.is_flag();
    let (loc5, loc6, sd2, sd2_links) = if flag {
        let loc5 = is_locally_k_large(x, 5)?;
        let loc6 = loc5 && is_locally_k_large(x, 6)?;
        let sd2 = loc5 && sd2star_violation(x, opts.pendant)?.is_none();
        let mut links = true;
        for s in x.simplices() {
            if sd2star_violation(&x.link(s)?, opts.pendant)?.is_some() {
                links = false;
                break;
            }
        }
        (loc5, loc6, sd2, links)
    } else {
        (false, false, false, false)
    };
    let sc = if x.is_connected() { is_simply_connected_bounded(x, opts.effort)? } else { TriState::No };
    Ok(Report {
        num_vertices: x.num_vertices(),
        f_vector: x.f_vector(),
        flag: flag.into(),
        loc5: loc5.into(),
        loc6: loc6.into(),
        sd2star: sd2.into(),
        sd2star_links: sd2_links.into(),
        simply_connected: sc,
        systolic: TriState::from(flag && loc6).and(sc),
        weakly_systolic: TriState::from(flag && sd2).and(sc),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use TriState::*;

    fn run(x: &Complex) -> Report {
        classify(x, &ClassifyOptions::default()).unwrap()
    }

    #[test]
    fn grid_is_systolic() {
        let r = run(&generate::tri_grid(5, 5).unwrap());
        assert_eq!(
            [r.flag, r.loc6, r.sd2star, r.sd2star_links, r.simply_connected, r.systolic, r.weakly_systolic],
            [Yes; 7]
        );
    }

    #[test]
    fn octahedron_and_cycle() {
        let r = run(&generate::octahedron());
        assert_eq!((r.flag, r.loc5, r.systolic), (Yes, No, No));
        let r = run(&generate::cycle(6).unwrap());
        assert_eq!((r.flag, r.loc6, r.simply_connected, r.systolic), (Yes, Yes, No, No));
    }

    #[test]
    fn empty_and_non_flag() {
        let r = run(&Complex::empty());
        assert_eq!(r.num_vertices, 0);
        assert_eq!(r.simply_connected, No);
        let r = run(&generate::tetra_boundary());
        assert_eq!((r.flag, r.loc5, r.simply_connected, r.systolic), (No, No, Yes, No));
    }

    #[test]
    fn machine_record_is_stable() {
        let r = run(&generate::icosahedron());
        assert_eq!(
            r.machine_record(),
            "flag=Y\nloc5=Y\nloc6=N\nsd2star=N\nsd2star_links=Y\nsc=Y\nsystolic=N\nweakly_systolic=N\n"
        );
    }
}
