//! The barycenter criterion: a Kähler-Einstein metric exists iff the weighted
//! barycenter of `2P₊` lies in the open cone `4ρ + Ξ`; outside the closure the
//! manifold is K-unstable. The boundary is left undecided.

use std::fmt;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::numeric::{approx_eq, sign, NumberFormat, Scalar, Vector};
use crate::polyint::{weighted_moments, Moments};
use crate::polytope::Polytope;
use crate::rootsys::{Cone, RootSystem, RootSystemLabel};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Interior,
    Boundary,
    Exterior,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    KeExists,
    KUnstable,
    BoundaryIndeterminate,
}

impl Verdict {
    pub fn from_membership(m: Membership) -> Self {
        match m {
            Membership::Interior => Verdict::KeExists,
            Membership::Exterior => Verdict::KUnstable,
            Membership::Boundary => Verdict::BoundaryIndeterminate,
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "KE_EXISTS" => Some(Verdict::KeExists),
            "K_UNSTABLE" => Some(Verdict::KUnstable),
            "BOUNDARY_INDETERMINATE" => Some(Verdict::BoundaryIndeterminate),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::KeExists => "KE_EXISTS",
            Verdict::KUnstable => "K_UNSTABLE",
            Verdict::BoundaryIndeterminate => "BOUNDARY_INDETERMINATE",
        })
    }
}

/// Facet normal of the cone together with `⟨n, point − apex⟩`.
pub type FacetSlack<T> = (Vector<i64>, T);

/// Position of `point` relative to the translated cone `apex + cone`.
pub fn cone_membership<T: Scalar>(
    point: &Vector<T>,
    apex: &Vector<T>,
    cone: &Cone,
) -> (Membership, Vec<FacetSlack<T>>) {
    let shifted = point - apex;
    let slacks: Vec<FacetSlack<T>> =
        cone.facet_normals().iter().map(|n| (n.clone(), n.cast::<T>().dot(&shifted))).collect();
    let membership = classify(slacks.iter().map(|(_, s)| s));
    (membership, slacks)
}

fn classify<'a, T: Scalar>(slacks: impl Iterator<Item = &'a T>) -> Membership {
    use std::cmp::Ordering::*;
    let mut all_positive = true;
    for s in slacks {
        match sign(s) {
            Less => return Membership::Exterior,
            Equal => all_positive = false,
            Greater => {}
        }
    }
    if all_positive {
        Membership::Interior
    } else {
        Membership::Boundary
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report<T> {
    pub root_system: RootSystemLabel,
    pub positive_roots: Vec<Vector<i64>>,
    pub positive_part: Polytope<T>,
    pub moments: Moments<T>,
    pub barycenter_p_plus: Vector<T>,
    pub barycenter_2p_plus: Vector<T>,
    /// `4ρ`.
    pub apex: Vector<T>,
    /// Slacks of `bar(2P₊)` against the facets of `4ρ + Ξ̄`.
    pub facet_slacks: Vec<FacetSlack<T>>,
    pub verdict: Verdict,
    /// Absence of KE metrics also rules out Kähler-Ricci solitons when the
    /// Futaki invariant vanishes; set only for built-in semisimple groups.
    pub no_soliton_flag: bool,
    pub notes: Vec<String>,
}

/// Runs the full pipeline on `P` or on `P₊`: positive part, weighted moments,
/// `bar(2P₊)`, and membership in `4ρ + Ξ`.
pub fn ke_verdict<T: Scalar>(rs: &RootSystem, p: &Polytope<T>) -> Result<Report<T>> {
    if p.dim() != rs.rank() {
        return Err(Error::InvalidInput(format!(
            "polytope has dimension {}, root system has rank {}",
            p.dim(),
            rs.rank()
        )));
    }
    let xi = rs.xi_cone()?;
    let weight = rs.weight_polynomial::<T>();
    let p_plus = p.positive_part(&rs.weyl_chamber())?;

    let moments = weighted_moments(&p_plus, &weight)?;
    let bar = moments.barycenter()?;
    let two = T::from_int(2);
    let bar2 = weighted_moments(&p_plus.dilate(&two)?, &weight)?.barycenter()?;
    if !bar2.iter().zip(bar.iter()).all(|(b2, b)| approx_eq(b2, &(b.clone() * two.clone()))) {
        return Err(Error::Inconsistent("bar(2P+) differs from 2 bar(P+)".into()));
    }

    let two_rho = rs.two_rho::<T>();
    let apex = two_rho.scale(&two);
    let (membership, facet_slacks) = cone_membership(&bar2, &apex, &xi);
    let (half_membership, _) = cone_membership(&bar, &two_rho, &xi);
    if membership != half_membership {
        return Err(Error::Inconsistent("membership of bar(P+) in 2rho+Xi disagrees with bar(2P+) in 4rho+Xi".into()));
    }
    let verdict = Verdict::from_membership(membership);

    let mut notes = Vec::new();
    if *rs.label() == RootSystemLabel::Sp4 {
        notes.push("Sp4 positive roots (1,-1) (1,1) (2,0) (0,2); weight uses primitive root directions".into());
    }
    let builtin = rs.label().is_builtin();
    if !builtin && verdict == Verdict::KUnstable {
        notes.push("custom root system: no_soliton_flag not asserted (center of the group unknown)".into());
    }

    Ok(Report {
        root_system: rs.label().clone(),
        positive_roots: rs.positive_roots().to_vec(),
        positive_part: p_plus,
        moments,
        barycenter_p_plus: bar,
        barycenter_2p_plus: bar2,
        apex,
        facet_slacks,
        verdict,
        no_soliton_flag: builtin && verdict == Verdict::KUnstable,
        notes,
    })
}

impl Report<BigRational> {
    /// Deterministic plain-text block ending with the `verdict` line.
    pub fn render(&self, format: NumberFormat) -> String {
        let fmt_vec = |v: &Vector<BigRational>| v.iter().map(|a| format.render(a)).collect::<Vec<_>>().join(" ");
        let int_vec = |v: &Vector<i64>| v.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" ");
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        if format == NumberFormat::Decimal {
            line("# decimal values are approximate (12 significant digits)".into());
        }
        line(format!("rootsystem {}", self.root_system));
        for a in &self.positive_roots {
            line(format!("posroot {}", int_vec(a)));
        }
        for note in &self.notes {
            line(format!("note {note}"));
        }
        for v in self.positive_part.boundary_cycle() {
            line(format!("vertex {}", fmt_vec(&v)));
        }
        line(format!("weighted_volume {}", format.render(&self.moments.weighted_volume)));
        line(format!("first_moments {}", fmt_vec(&self.moments.first_moments)));
        line(format!("barycenter_P+ {}", fmt_vec(&self.barycenter_p_plus)));
        line(format!("barycenter_2P+ {}", fmt_vec(&self.barycenter_2p_plus)));
        line(format!("apex_4rho {}", fmt_vec(&self.apex)));
        for (n, s) in &self.facet_slacks {
            line(format!("slack {} {}", int_vec(n), format.render(s)));
        }
        line(format!("no_soliton_flag {}", self.no_soliton_flag));
        line(format!("verdict {}", self.verdict));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;
    use crate::polyint::barycenter;
    use crate::polytope::{enumerate_vertices, HalfSpace};

    type Q = BigRational;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    fn hs(n: &[i64], c: i64) -> HalfSpace<Q> {
        HalfSpace::new(n.iter().map(|&a| q(a, 1)).collect(), q(c, 1)).unwrap()
    }

    fn so4_plus(extra: &[(&[i64], i64)]) -> Polytope<Q> {
        let mut v = vec![hs(&[-1, 1], 0), hs(&[-1, -1], 0)];
        v.extend(extra.iter().map(|(n, c)| hs(n, *c)));
        enumerate_vertices(2, v).unwrap()
    }

    #[test]
    fn membership_examples() {
        let xi = RootSystem::so4().xi_cone().unwrap();
        let apex = Vector(vec![q(2, 1), q(0, 1)]);
        let (m, slacks) = cone_membership(&Vector(vec![q(18, 7), q(0, 1)]), &apex, &xi);
        assert_eq!(m, Membership::Interior);
        assert!(slacks.iter().all(|(_, s)| *s == q(4, 7)));

        let (m, slacks) = cone_membership(&Vector(vec![q(489, 196), q(15, 28)]), &apex, &xi);
        assert_eq!(m, Membership::Exterior);
        let on_first = slacks.iter().find(|(n, _)| n.0 == vec![1, -1]).unwrap();
        assert_eq!(on_first.1, q(-8, 196));

        let (m, slacks) = cone_membership(&apex, &apex, &xi);
        assert_eq!(m, Membership::Boundary);
        assert!(slacks.iter().all(|(_, s)| *s == q(0, 1)));
    }

    #[test]
    fn so4_verdicts() {
        let rs = RootSystem::so4();
        let r1 = ke_verdict(&rs, &so4_plus(&[(&[1, 0], 3)])).unwrap();
        assert_eq!(r1.verdict, Verdict::KeExists);
        assert!(!r1.no_soliton_flag);
        assert_eq!(r1.barycenter_2p_plus, Vector(vec![q(36, 7), q(0, 1)]));

        let r3 = ke_verdict(&rs, &so4_plus(&[(&[1, 0], 3), (&[1, -1], 3), (&[2, -1], 5)])).unwrap();
        assert_eq!(r3.verdict, Verdict::KUnstable);
        assert!(r3.no_soliton_flag);
    }

    #[test]
    fn full_polytope_input_is_restricted() {
        let square =
            enumerate_vertices(2, vec![hs(&[1, 0], 3), hs(&[-1, 0], 3), hs(&[0, 1], 3), hs(&[0, -1], 3)]).unwrap();
        let r = ke_verdict(&RootSystem::so4(), &square).unwrap();
        assert_eq!(r.barycenter_p_plus, Vector(vec![q(18, 7), q(0, 1)]));
        assert_eq!(r.verdict, Verdict::KeExists);
    }

    #[test]
    fn custom_root_systems_never_claim_no_soliton() {
        let rs = RootSystem::custom(2, vec![Vector(vec![1, -1]), Vector(vec![1, 1])]).unwrap();
        let r = ke_verdict(&rs, &so4_plus(&[(&[1, 0], 3), (&[1, -1], 3), (&[2, -1], 5)])).unwrap();
        assert_eq!(r.verdict, Verdict::KUnstable);
        assert!(!r.no_soliton_flag);
        assert!(!r.notes.is_empty());
    }

    #[test]
    fn render_ends_with_verdict() {
        let r = ke_verdict(&RootSystem::so4(), &so4_plus(&[(&[1, 0], 3)])).unwrap();
        let text = r.render(NumberFormat::Exact);
        assert!(text.ends_with("verdict KE_EXISTS\n"));
        assert!(text.contains("barycenter_P+ 18/7 0\n"));
        assert!(text.contains("slack 1 -1 8/7\n"));
        assert!(text.contains("weighted_volume 648/5\n"));
        let dec = r.render(NumberFormat::Decimal);
        assert!(dec.contains("barycenter_P+ ~2.57142857143 ~0\n"));
    }

    #[test]
    fn slacks_shrink_across_so4_cases() {
        let rs = RootSystem::so4();
        let cases = [
            so4_plus(&[(&[1, 0], 3)]),
            so4_plus(&[(&[1, 0], 3), (&[1, -1], 3)]),
            so4_plus(&[(&[1, 0], 3), (&[1, -1], 3), (&[2, -1], 5)]),
        ];
        let slack_on = |p: &Polytope<Q>, normal: &[i64]| {
            ke_verdict(&rs, p).unwrap().facet_slacks.into_iter().find(|(n, _)| n.0 == normal).unwrap().1
        };
        let lower: Vec<Q> = cases.iter().map(|p| slack_on(p, &[1, -1])).collect();
        assert!(lower[0] > lower[1] && lower[1] > lower[2]);
        // the cuts remove mass below the diagonal, so the other slack grows
        let upper: Vec<Q> = cases.iter().map(|p| slack_on(p, &[1, 1])).collect();
        assert!(upper[0] < upper[1]);
    }

    #[test]
    fn verdict_invariant_under_root_rescaling() {
        let p = so4_plus(&[(&[1, 0], 3), (&[1, -1], 3)]);
        let x = Polynomial::<Q>::variable(2, 0);
        let y = Polynomial::<Q>::variable(2, 1);
        let a = x.add(&y.scale(&q(-1, 1)));
        let b = x.add(&y);
        let plain = a.pow(2).mul(&b.pow(2));
        let scaled = a.scale(&q(3, 1)).pow(2).mul(&b.scale(&q(5, 7)).pow(2));
        assert_eq!(barycenter(&p, &plain).unwrap(), barycenter(&p, &scaled).unwrap());
    }
}
