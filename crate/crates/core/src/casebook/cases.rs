//! The eleven cases as data. Right-hand sides are transcribed factor by
//! factor from the claimed products, in the order they are displayed.

use super::{CaseKind, CaseSpec, Claim, Pattern, Shape};
use crate::repalg::BaseType::{self, *};

const L: &str = "Ad(pi) (x) Ad(pi') tw chi";
const L_SPLIT: &str = "chi (+) Ad(pi) tw chi (+) Sym^4(pi) tw chi*omega^-2";
const PI1: &str = "(zeta (+) Ad(pi) (+) Sym^4(pi) tw chi*omega^-2)";

fn pair(a: BaseType, b: BaseType, te: bool) -> Pattern {
    Pattern {
        pi: Some(a),
        pi_prime: Some(b),
        twist_equivalent: Some(te),
    }
}

fn hyp(a: &str, b: &str, te: bool) -> String {
    let te = if te { "twist-equivalent" } else { "twist-inequivalent" };
    format!("pi {a}\npi' {b}\n{te}\n")
}

pub(super) fn all() -> Vec<CaseSpec> {
    vec![
        CaseSpec {
            id: "4.1",
            title: "Sym^3(pi), Sym^3(pi') not cuspidal",
            hypotheses: hyp("tetrahedral", "tetrahedral", false),
            pattern: pair(Tetrahedral, Tetrahedral, false),
            kind: CaseKind::Quotient {
                l: 6,
                k: 10,
                rhs: "6 zeta (+) mu*mu' (+) bar(mu)*bar(mu') (+) mu*bar(mu') (+) bar(mu)*mu' \
                      (+) 12 Ad(pi) (+) 4 Ad(pi') (+) 4 Ad(pi) tw mu' (+) 4 Ad(pi) tw bar(mu') (+) 5 mu (+) 5 bar(mu) \
                      (+) 2 Ad(pi') tw mu (+) 2 Ad(pi') tw bar(mu) (+) 2 Ad(pi') tw chi (+) 2 Ad(pi') tw bar(chi) (+) 2 mu' \
                      (+) 2 bar(mu') (+) 2 Ad(pi') tw chi*mu (+) 2 Ad(pi') tw bar(chi)*mu (+) 2 Ad(pi') tw chi*bar(mu) \
                      (+) 2 Ad(pi') tw bar(chi)*bar(mu) (+) 8 Ad(pi) (x) Ad(pi')",
            },
        },
        CaseSpec {
            id: "4.2",
            title: "Sym^3(pi) not cuspidal, Sym^3(pi') cuspidal, Sym^4(pi') not cuspidal",
            hypotheses: hyp("tetrahedral", "octahedral", false),
            pattern: pair(Tetrahedral, Octahedral, false),
            kind: CaseKind::Quotient {
                l: 6,
                k: 6,
                rhs: "6 zeta \
                      (+) 12 Ad(pi) (+) 2 Ad(pi') (+) 2 nu(pi') (+) 4 Ad(pi) (x) nu(pi') (+) 2 Ad(pi') tw eta' \
                      (+) 4 Ad(pi) (x) Ad(pi') tw eta' (+) 5 mu (+) 5 bar(mu) (+) nu(pi') tw mu (+) nu(pi') tw bar(mu) \
                      (+) Ad(pi') tw mu (+) Ad(pi') tw bar(mu) (+) Ad(pi') tw mu*eta' (+) Ad(pi') tw bar(mu)*eta' \
                      (+) 4 Ad(pi) (x) Ad(pi') (+) 2 Ad(pi') tw chi (+) 2 Ad(pi') tw bar(chi) (+) 2 Ad(pi') tw chi*mu \
                      (+) 2 Ad(pi') tw bar(chi)*mu (+) 2 Ad(pi') tw chi*bar(mu) (+) 2 Ad(pi') tw bar(chi)*bar(mu)",
            },
        },
        CaseSpec {
            id: "4.3",
            title: "Sym^3 cuspidal, Sym^4 not cuspidal for both",
            hypotheses: hyp("octahedral", "octahedral", false),
            pattern: pair(Octahedral, Octahedral, false),
            kind: CaseKind::Quotient {
                l: 4,
                k: 7,
                rhs: "6 zeta (+) nu(pi) (x) nu(pi') \
                      (+) 7 Ad(pi) (+) 2 Ad(pi') (+) nu(pi) (x) Ad(pi') (+) 5 Ad(pi) tw eta (+) 3 Ad(pi) (x) nu(pi') \
                      (+) 2 nu(pi') (+) 5 nu(pi) (+) Ad(pi) (x) nu(pi') tw eta (+) 2 Ad(pi') tw eta' (+) Ad(pi') (x) nu(pi) tw eta' \
                      (+) Ad(pi) (x) Ad(pi') tw eta (+) 2 Ad(pi') tw chi (+) 2 Ad(pi') tw bar(chi) (+) 2 Ad(pi') (x) nu(pi) tw chi \
                      (+) 3 Ad(pi) (x) Ad(pi') tw eta' (+) 2 Ad(pi') (x) nu(pi) tw bar(chi) (+) Ad(pi) (x) Ad(pi') tw eta*eta' \
                      (+) 3 Ad(pi) (x) Ad(pi') (+) 2 Ad(pi) (x) Ad(pi') tw chi*eta (+) 2 Ad(pi) (x) Ad(pi') tw bar(chi)*eta",
            },
        },
        CaseSpec {
            id: "4.4.1",
            title: "Sym^4(pi) cuspidal, Sym^3(pi') not cuspidal",
            hypotheses: hyp("general", "tetrahedral", false),
            pattern: pair(General, Tetrahedral, false),
            kind: CaseKind::Quotient {
                l: 4,
                k: 6,
                rhs: "6 zeta \
                      (+) 7 Ad(pi) (+) 4 Ad(pi') (+) 2 mu' (+) 2 bar(mu') (+) 3 Ad(pi) tw mu' (+) 3 Ad(pi) tw bar(mu') \
                      (+) 5 Sym^4(pi) tw omega^-2 (+) Sym^4(pi) tw omega^-2*mu' (+) Sym^4(pi) tw omega^-2*bar(mu') \
                      (+) 2 Ad(pi') tw chi (+) 2 Sym^4(pi) (x) Ad(pi') tw chi*omega^-2 \
                      (+) 2 Sym^4(pi) (x) Ad(pi') tw bar(chi)*omega^-2 (+) 2 Ad(pi') tw bar(chi) \
                      (+) 2 Sym^4(pi) (x) Ad(pi') tw omega^-2 (+) 6 Ad(pi) (x) Ad(pi')",
            },
        },
        CaseSpec {
            id: "4.4.2",
            title: "Sym^4(pi) cuspidal, Sym^3(pi') cuspidal, Sym^4(pi') not cuspidal",
            hypotheses: hyp("general", "octahedral", false),
            pattern: pair(General, Octahedral, false),
            kind: CaseKind::Quotient {
                l: 4,
                k: 6,
                rhs: "6 zeta \
                      (+) 5 Sym^4(pi) tw omega^-2 (+) 2 Ad(pi') tw eta' (+) 3 Ad(pi) (x) nu(pi') (+) 2 Ad(pi') (+) 2 nu(pi') \
                      (+) 7 Ad(pi) (+) 3 Ad(pi) (x) Ad(pi') tw eta' (+) Sym^4(pi) (x) Ad(pi') tw omega^-2*eta' \
                      (+) Sym^4(pi) (x) nu(pi') tw omega^-2 (+) Sym^4(pi) (x) Ad(pi') tw omega^-2 (+) 3 Ad(pi) (x) Ad(pi') \
                      (+) 2 Ad(pi') tw chi (+) 2 Sym^4(pi) (x) Ad(pi') tw chi*omega^-2 (+) 2 Ad(pi') tw bar(chi) \
                      (+) 2 Sym^4(pi) (x) Ad(pi') tw bar(chi)*omega^-2",
            },
        },
        CaseSpec {
            id: "4.4.3",
            title: "Sym^4(pi), Sym^4(pi') cuspidal",
            hypotheses: hyp("general", "general", false),
            pattern: pair(General, General, false),
            kind: CaseKind::Quotient {
                l: 4,
                k: 7,
                rhs: "6 zeta (+) Sym^4(pi) (x) Sym^4(pi') tw omega^-2*omega'^-2 \
                      (+) 2 Ad(pi') tw chi (+) 2 Ad(pi') tw bar(chi) (+) 5 Sym^4(pi) tw omega^-2 (+) 7 Ad(pi) (+) 2 Ad(pi') \
                      (+) 3 Ad(pi) (x) Ad(pi') (+) 3 Ad(pi) (x) Sym^4(pi') tw omega'^-2 (+) 2 Sym^4(pi') tw omega'^-2 \
                      (+) Ad(pi') (x) Sym^4(pi) tw omega^-2 (+) 4 Ad(pi') (x) Sym^4(pi) tw omega^-2",
            },
        },
        CaseSpec {
            id: "5.1",
            title: "pi, pi' dihedral",
            hypotheses: hyp("dihedral", "dihedral", false),
            pattern: Pattern {
                pi: Some(Dihedral),
                pi_prime: Some(Dihedral),
                twist_equivalent: None,
            },
            kind: CaseKind::Factorization {
                claims: vec![Claim::new(
                    "L factors over GL(m) x GL(n), m, n <= 2",
                    L,
                    "Ind(pi) (x) Ind(pi') tw chi*omega^-1*omega'^-1 (+) Ind(pi) tw chi*xi'*omega^-1*omega'^-1 \
                     (+) Ind(pi') tw chi*xi*omega^-1*omega'^-1 (+) chi*xi*xi'*omega^-1*omega'^-1",
                )],
                shape: Shape { degrees: [2, 2] },
            },
        },
        CaseSpec {
            id: "5.2",
            title: "pi non-dihedral, pi' dihedral",
            hypotheses: hyp("non-dihedral", "dihedral", false),
            pattern: Pattern {
                pi: Some(NonDihedral),
                pi_prime: Some(Dihedral),
                twist_equivalent: Some(false),
            },
            kind: CaseKind::Factorization {
                claims: vec![Claim::new(
                    "L = L(Ind x Ad tw chi bar(omega')) L(Ad tw chi bar(omega') xi')",
                    L,
                    "Ind(pi') (x) Ad(pi) tw chi*omega'^-1 (+) Ad(pi) tw chi*xi'*omega'^-1",
                )],
                shape: Shape { degrees: [3, 2] },
            },
        },
        CaseSpec {
            id: "5.3.1",
            title: "pi ~ pi', Sym^3(pi) not cuspidal",
            hypotheses: hyp("tetrahedral", "tetrahedral", true),
            pattern: pair(Tetrahedral, Tetrahedral, true),
            kind: CaseKind::Factorization {
                claims: vec![
                    Claim::new("L = L(chi) L(Ad tw chi) L(Sym^4 tw chi bar(omega)^2)", L, L_SPLIT),
                    Claim::new(
                        "Sym^4 tw chi bar(omega)^2 = Ad tw chi + chi bar(mu) + chi mu",
                        "Sym^4(pi) tw chi*omega^-2",
                        "Ad(pi) tw chi (+) chi*bar(mu) (+) chi*mu",
                    ),
                    Claim::new("cubic self-twist chi = mu: L = zeta L(Ad) L(Sym^4 tw bar(omega)^2)", L, "zeta (+) Ad(pi) (+) Sym^4(pi) tw omega^-2")
                        .with_hypotheses("relation chi = mu\n"),
                    Claim::new(
                        "cubic self-twist chi = mu: Sym^4 tw bar(omega)^2 = Ad + mu + bar(mu)",
                        "Sym^4(pi) tw omega^-2",
                        "Ad(pi) (+) mu (+) bar(mu)",
                    )
                    .with_hypotheses("relation chi = mu\n"),
                ],
                shape: Shape { degrees: [3, 0] },
            },
        },
        CaseSpec {
            id: "5.3.2",
            title: "pi ~ pi', Sym^3(pi) cuspidal, Sym^4(pi) not cuspidal",
            hypotheses: hyp("octahedral", "octahedral", true),
            pattern: pair(Octahedral, Octahedral, true),
            kind: CaseKind::Factorization {
                claims: vec![
                    Claim::new("L = L(chi) L(Ad tw chi) L(Sym^4 tw chi bar(omega)^2)", L, L_SPLIT),
                    Claim::new(
                        "Sym^4 tw chi bar(omega)^2 = nu tw chi + Ad tw eta chi",
                        "Sym^4(pi) tw chi*omega^-2",
                        "nu(pi) tw chi (+) Ad(pi) tw eta*chi",
                    ),
                ],
                shape: Shape { degrees: [3, 0] },
            },
        },
        CaseSpec {
            id: "5.3.3",
            title: "pi ~ pi', Sym^4(pi) cuspidal",
            hypotheses: hyp("general", "general", true),
            pattern: pair(General, General, true),
            kind: CaseKind::Square {
                l: 2,
                k: 3,
                claims: vec![
                    Claim::new("L = L(chi) L(Ad tw chi) L(Sym^4 tw chi bar(omega)^2)", L, L_SPLIT),
                    Claim::new(
                        "D_8 = L(Pi_1 x ~Pi_1)",
                        "(zeta (+) Ad(pi) (+) Sym^4(pi) tw chi*omega^-2) (x) ~(zeta (+) Ad(pi) (+) Sym^4(pi) tw chi*omega^-2)",
                        "zeta (+) Ad(pi) (x) Ad(pi) (+) Sym^4(pi) (x) ~Sym^4(pi) (+) 2 Ad(pi) \
                         (+) Ad(pi) (x) Sym^4(pi) tw chi*omega^-2 (+) Ad(pi) (x) Sym^4(pi) tw bar(chi)*omega^-2 \
                         (+) Sym^4(pi) tw chi*omega^-2 (+) Sym^4(pi) tw bar(chi)*omega^-2",
                    )
                    .pair_view(),
                ],
                square: PI1,
                target: "Sym^4(pi) tw chi*omega^-2",
                numerator: "Ad(pi) (x) Sym^4(pi) tw chi*omega^-2",
            },
        },
    ]
}
