use std::collections::HashSet;

use bigrass_core::bdet::{
    bdet_condense_with_stats, bdet_definition, bdet_via_deformation, condensation_identity_check,
    det_classic, lambda_det, lambda_q_det, little_invariance_check, random_monomial_matrix,
    random_rational_matrix, seeded_rng, MAX_LEIBNIZ_N,
};
use bigrass_core::bpoly::{
    bn_lambda_q, bn_lambda_q_recursion, bn_product, bn_with_limit, max_beta,
    reading_polynomial_with_limit, sign_balance, Route,
};
use bigrass_core::perm::{
    bigrassmannians_below, bruhat_leq, enumerate_sn_with_limit, BruhatClosure,
};
use bigrass_core::poly::sign_specialization;
use bigrass_core::tournament::{
    enumerate_tn_with_limit, pair_count, perfect_matching_with_limit, MAX_MATCHING_N,
};
use bigrass_core::vandermonde::{tournament_sum, vandermonde_product, vanishing_check};
use bigrass_core::{BetaMethod, Error, Monomial, PolyMatrix, Polynomial, Substitution};
use clap::ValueEnum;
use num_rational::BigRational;
use num_traits::One;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Routes,
    Bdet,
    Condensation,
    Reading,
    Tournaments,
    Vandermonde,
    Bruhat,
    Lambda,
    Balance,
    Beta,
    All,
}

impl Suite {
    const EACH: [Suite; 10] = [
        Suite::Beta,
        Suite::Routes,
        Suite::Bdet,
        Suite::Condensation,
        Suite::Reading,
        Suite::Tournaments,
        Suite::Vandermonde,
        Suite::Bruhat,
        Suite::Lambda,
        Suite::Balance,
    ];

    /// Largest `n` a suite ranges over unless `--max-n` says otherwise.
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Routes | Suite::Balance | Suite::Beta => 7,
            Suite::Bdet | Suite::Vandermonde | Suite::Bruhat => 5,
            Suite::Tournaments | Suite::Lambda => 6,
            Suite::Reading => 8,
            Suite::Condensation => 4,
            Suite::All => 5,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Routes => "routes",
            Suite::Bdet => "bdet",
            Suite::Condensation => "condensation",
            Suite::Reading => "reading",
            Suite::Tournaments => "tournaments",
            Suite::Vandermonde => "vandermonde",
            Suite::Bruhat => "bruhat",
            Suite::Lambda => "lambda",
            Suite::Balance => "balance",
            Suite::Beta => "beta",
            Suite::All => "all",
        }
    }
}

pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

pub struct Options {
    pub n: Option<usize>,
    pub max_n: Option<usize>,
    pub trials: usize,
    pub seed: u64,
}

/// Why a check did not pass: the identity was violated, or the library
/// refused the inputs.
enum Failure {
    Identity(String),
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

type Outcome = Result<(), Failure>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(Failure::Identity(msg()))
    }
}

struct Runner {
    suite: Suite,
    checks: Vec<Check>,
}

impl Runner {
    /// Records one check. Bound violations are usage errors and abort the
    /// run; any other library error counts as a failed identity.
    fn check(&mut self, name: String, f: impl FnOnce() -> Outcome) -> Result<(), Error> {
        let (ok, detail) = match f() {
            Ok(()) => (true, String::new()),
            Err(Failure::Identity(why)) => (false, why),
            Err(Failure::Library(e @ Error::BoundExceeded { .. })) => return Err(e),
            Err(Failure::Library(e)) => (false, e.to_string()),
        };
        self.checks.push(Check {
            suite: self.suite,
            name,
            ok,
            detail,
        });
        Ok(())
    }
}

pub fn run(suite: Suite, opts: &Options) -> Result<Vec<Check>, Error> {
    let suites: Vec<Suite> = if suite == Suite::All {
        Suite::EACH.to_vec()
    } else {
        vec![suite]
    };
    let mut checks = Vec::new();
    for s in suites {
        let top = opts.max_n.unwrap_or(s.default_max_n());
        let mut r = Runner {
            suite: s,
            checks: Vec::new(),
        };
        match s {
            Suite::Beta => beta(&mut r, top)?,
            Suite::Routes => routes(&mut r, top)?,
            Suite::Bdet => bdet(&mut r, top, opts)?,
            Suite::Condensation => condensation(&mut r, top, opts)?,
            Suite::Reading => reading(&mut r, top)?,
            Suite::Tournaments => tournaments(&mut r, top)?,
            Suite::Vandermonde => vandermonde(&mut r, top)?,
            Suite::Bruhat => bruhat(&mut r, top)?,
            Suite::Lambda => lambda(&mut r, top, opts)?,
            Suite::Balance => balance(&mut r, top)?,
            Suite::All => unreachable!("expanded above"),
        }
        checks.extend(r.checks);
    }
    Ok(checks)
}

fn beta(r: &mut Runner, top: usize) -> Result<(), Error> {
    for n in 1..=top {
        r.check(
            format!("three beta formulas agree and beta(w) = beta(w^-1) on S_{n}"),
            || {
                for w in enumerate_sn_with_limit(n, top)? {
                    let b = w.beta();
                    for m in BetaMethod::ALL {
                        let got = w.beta_by(m);
                        if got != b {
                            return Err(Failure::Identity(format!(
                                "w={w}: {m:?} gives {got}, linear sum gives {b}"
                            )));
                        }
                    }
                    let bi = w.inverse().beta();
                    if bi != b {
                        return Err(Failure::Identity(format!(
                            "w={w}: beta={b}, beta of inverse={bi}"
                        )));
                    }
                }
                Ok(())
            },
        )?;
    }
    Ok(())
}

fn routes(r: &mut Runner, top: usize) -> Result<(), Error> {
    for n in 1..=top {
        r.check(format!("sum = product = recursion = det for B_{n}"), || {
            let polys = Route::ALL
                .iter()
                .map(|&route| bn_with_limit(n, route, top.max(route.default_limit())))
                .collect::<Result<Vec<_>, _>>()?;
            let first = &polys[0];
            for p in &polys[1..] {
                ensure(p.poly == first.poly, || {
                    format!(
                        "{} gives {}, {} gives {}",
                        first.route, first.poly, p.route, p.poly
                    )
                })?;
            }
            Ok(())
        })?;
    }
    Ok(())
}

fn bdet(r: &mut Runner, top: usize, opts: &Options) -> Result<(), Error> {
    let mut rng = seeded_rng(opts.seed);
    let top = top.min(MAX_LEIBNIZ_N);
    for n in 1..=top {
        let matrices: Vec<PolyMatrix> = (0..opts.trials)
            .map(|_| random_monomial_matrix(n, &mut rng))
            .collect();
        r.check(
            format!(
                "definition = deformation = condensation = b' = b'' on {} random {n}x{n} (seed {})",
                opts.trials, opts.seed
            ),
            || {
                for (t, a) in matrices.iter().enumerate() {
                    let def = bdet_definition(a)?;
                    let deform = bdet_via_deformation(a)?;
                    let (cond, _) = bdet_condense_with_stats(a)?;
                    let inv = if n <= bigrass_core::bdet::MAX_INVARIANCE_N {
                        little_invariance_check(a)?.to_vec()
                    } else {
                        Vec::new()
                    };
                    let all_equal = deform == def && cond == def && inv.iter().all(|p| *p == def);
                    if !all_equal {
                        return Err(Failure::Identity(format!(
                            "trial {t}: routes differ on {a}"
                        )));
                    }
                    if def.at_q_one() != det_classic(a)?.at_q_one() {
                        return Err(Failure::Identity(format!(
                            "trial {t}: bdet at q=1 is not det on {a}"
                        )));
                    }
                }
                Ok(())
            },
        )?;
    }
    Ok(())
}

fn condensation(r: &mut Runner, top: usize, opts: &Options) -> Result<(), Error> {
    let sizes: Vec<usize> = match opts.n {
        Some(n) => vec![n],
        None => (3..=top.min(MAX_LEIBNIZ_N)).collect(),
    };
    let mut rng = seeded_rng(opts.seed);
    for n in sizes {
        let matrices: Vec<PolyMatrix> = (0..opts.trials)
            .map(|_| random_monomial_matrix(n, &mut rng))
            .collect();
        r.check(
            format!("weighted condensation and its five minor identities on {} random {n}x{n} (seed {})", opts.trials, opts.seed),
            || {
                for (t, a) in matrices.iter().enumerate() {
                    let report = condensation_identity_check(a)?;
                    if !report.holds() {
                        return Err(Failure::Identity(format!("trial {t}: {report:?} on {a}")));
                    }
                }
                Ok(())
            },
        )?;
    }
    Ok(())
}

fn reading(r: &mut Runner, top: usize) -> Result<(), Error> {
    let limit = top.max(bigrass_core::bpoly::MAX_READING_N);
    for n in 1..=top {
        r.check(
            format!("permanent of the deformed ones matrix is sum of q^beta over S_{n}"),
            || {
                let p = reading_polynomial_with_limit(n, limit)?;
                let factorial: BigRational = (1..=n as i64)
                    .map(|k| BigRational::from_integer(k.into()))
                    .product();
                ensure(p.at_q_one() == Polynomial::constant(factorial), || {
                    format!("value at q=1 is {}", p.at_q_one())
                })?;
                let mirrored = p
                    .q_reflect()
                    .mul_monomial(&Monomial::q_pow(max_beta(n) as i64));
                ensure(mirrored == p, || {
                    format!("coefficients of {p} are not palindromic")
                })?;
                if n <= MAX_LEIBNIZ_N {
                    let mut direct = Polynomial::zero();
                    for w in enumerate_sn_with_limit(n, MAX_LEIBNIZ_N)? {
                        direct.add_term(Monomial::q_pow(w.beta() as i64), BigRational::one());
                    }
                    ensure(direct == p, || {
                        format!("permanent {p}, direct sum {direct}")
                    })?;
                }
                Ok(())
            },
        )?;
    }
    Ok(())
}

fn tournaments(r: &mut Runner, top: usize) -> Result<(), Error> {
    let limit = top.max(bigrass_core::tournament::MAX_ENUMERATION_N);
    for n in 1..=top {
        r.check(
            format!(
                "|T_{n}| = 2^{} and the transitive ones are S_{n}",
                pair_count(n)
            ),
            || {
                let mut total = 0u64;
                let mut perms = HashSet::new();
                for g in enumerate_tn_with_limit(n, limit)? {
                    total += 1;
                    if g.is_transitive() {
                        perms.insert(g.to_permutation()?);
                    }
                }
                ensure(total == 1 << pair_count(n), || {
                    format!("counted {total} tournaments")
                })?;
                let fact: u64 = (1..=n as u64).product();
                ensure(perms.len() as u64 == fact, || {
                    format!("{} transitive", perms.len())
                })?;
                Ok(())
            },
        )?;
    }
    for n in 1..=top.min(MAX_MATCHING_N) {
        r.check(
            format!("cycle reversals pair off T_{n} minus S_{n}"),
            || {
                let m = perfect_matching_with_limit(n, MAX_MATCHING_N)?;
                ensure(m.is_perfect(), || {
                    format!("{} left unmatched", m.unmatched.len())
                })?;
                let mut seen = HashSet::new();
                for p in &m.pairs {
                    ensure(p.a.beta() == p.b.beta(), || {
                        format!("beta differs: {} / {}", p.a, p.b)
                    })?;
                    ensure((p.a.length() + p.b.length()) % 2 == 1, || {
                        format!("same parity: {} / {}", p.a, p.b)
                    })?;
                    ensure(seen.insert(p.a) && seen.insert(p.b), || {
                        format!("{} used twice", p.a)
                    })?;
                    ensure(!p.a.is_transitive() && !p.b.is_transitive(), || {
                        "transitive tournament matched".into()
                    })?;
                }
                let cyclic = (1u64 << pair_count(n)) - (1..=n as u64).product::<u64>();
                ensure(seen.len() as u64 == cyclic, || {
                    format!("covered {} of {cyclic}", seen.len())
                })?;
                Ok(())
            },
        )?;
    }
    for n in 1..=top.min(bigrass_core::vandermonde::MAX_SUM_N) {
        r.check(
            format!("cyclic tournaments vanish at x=1, lambda=-1 for n={n}"),
            || {
                let v = vanishing_check(n)?;
                ensure(v.is_zero(), || format!("got {v}"))
            },
        )?;
    }
    Ok(())
}

fn vandermonde(r: &mut Runner, top: usize) -> Result<(), Error> {
    let top = top.min(bigrass_core::vandermonde::MAX_SUM_N);
    for n in 1..=top {
        r.check(
            format!("Vandermonde product = tournament sum for n={n}"),
            || {
                for weighted in [false, true] {
                    let prod = vandermonde_product(n, weighted)?;
                    let sum = tournament_sum(n, weighted)?;
                    ensure(prod == sum.total, || {
                        format!("weighted={weighted}: {prod} vs {}", sum.total)
                    })?;
                    ensure(sum.total == &sum.transitive_part + &sum.cyclic_part, || {
                        "parts do not add up".into()
                    })?;
                }
                let weighted = tournament_sum(n, true)?;
                let plain = tournament_sum(n, false)?;
                ensure(weighted.total.at_q_one() == plain.total, || {
                    "weighted sum at q=1 is not the plain sum".into()
                })?;
                let b = weighted
                    .transitive_part
                    .eval(&sign_specialization(n as u32))?;
                let bn = bn_product(n)?;
                ensure(b == bn, || {
                    format!("transitive part at x=1, lambda=-1 is {b}, B_{n} is {bn}")
                })?;
                Ok(())
            },
        )?;
    }
    Ok(())
}

fn bruhat(r: &mut Runner, top: usize) -> Result<(), Error> {
    for n in 1..=top {
        r.check(
            format!("number of bigrassmannians below w is beta(w) on S_{n}"),
            || {
                for w in enumerate_sn_with_limit(n, top.max(bigrass_core::perm::MAX_ENUMERATION_N))?
                {
                    let c = bigrassmannians_below(&w)?.len();
                    if c as u64 != w.beta() {
                        return Err(Failure::Identity(format!(
                            "w={w}: {c} below, beta={}",
                            w.beta()
                        )));
                    }
                }
                Ok(())
            },
        )?;
    }
    for n in 1..=top.min(BruhatClosure::MAX_N) {
        r.check(
            format!("prefix criterion matches transitive closure on S_{n}"),
            || {
                let closure = BruhatClosure::new(n)?;
                for u in closure.elements() {
                    for w in closure.elements() {
                        let (a, b) = (bruhat_leq(u, w)?, closure.leq(u, w)?);
                        if a != b {
                            return Err(Failure::Identity(format!(
                                "{u} <= {w}: prefix {a}, closure {b}"
                            )));
                        }
                    }
                }
                Ok(())
            },
        )?;
    }
    Ok(())
}

fn lambda(r: &mut Runner, top: usize, opts: &Options) -> Result<(), Error> {
    let minus_one = Substitution::new().lambda(-BigRational::one());
    let size = opts.n.unwrap_or(4);
    let mut rng = seeded_rng(opts.seed);
    let matrices: Vec<PolyMatrix> = (0..opts.trials)
        .map(|_| random_rational_matrix(size, &mut rng))
        .collect();
    r.check(
        format!(
            "lambda-determinant at lambda=-1 is det on {} random rational {size}x{size} (seed {})",
            opts.trials, opts.seed
        ),
        || {
            for (t, a) in matrices.iter().enumerate() {
                let at = lambda_det(a)?.eval(&minus_one)?;
                let det = det_classic(a)?;
                if at.to_polynomial().as_ref() != Some(&det) {
                    return Err(Failure::Identity(format!(
                        "trial {t}: {at} vs {det} on {a}"
                    )));
                }
            }
            Ok(())
        },
    )?;
    for n in 1..=top {
        r.check(
            format!("lambda-q determinant of ones is B_{n}(lambda, q)"),
            || {
                let v = lambda_q_det(&PolyMatrix::ones(n))?;
                let want = bn_lambda_q(n)?;
                ensure(v.to_polynomial().as_ref() == Some(&want), || {
                    format!("got {v}")
                })?;
                ensure(bn_lambda_q_recursion(n)? == want, || {
                    "recursion differs from product".into()
                })?;
                let at = want.eval(&minus_one)?;
                ensure(at == bn_product(n)?, || format!("at lambda=-1 got {at}"))?;
                Ok(())
            },
        )?;
    }
    Ok(())
}

fn balance(r: &mut Runner, top: usize) -> Result<(), Error> {
    for n in 3..=top {
        r.check(format!("signed sum of beta over S_{n} is 0"), || {
            let s = sign_balance(n)?;
            ensure(s == 0, || format!("got {s}"))
        })?;
    }
    Ok(())
}
