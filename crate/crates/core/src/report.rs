//! The registry of named verification checks and the machine-readable
//! report they produce. Each check carries the mathematical statement it
//! certifies, so logs are self-documenting.

use crate::cherednik::{
    check_standard_module_twist, twist_factorisation_check, AlgebraFlavor, CherednikAlgebra,
    CherednikParams, EtaPhiEmbedding, GroupRep,
};
use crate::chars::{
    bn_character_table, find_inner_witness, verify_b_twist, verify_d_bijection,
    verify_j1_equals_jminusi, GroupClasses,
};
use crate::coinv::{
    center_basis, check_restricted_iso_even_case, check_twisted_coinvariant_product,
    invariant_generators, reg_char_intertwine_check, trace_invariance_check,
    verify_not_isom_witness, CoinvariantQuotient, GradedIdeal, PolyRing, RestrictedAlgebra,
};
use crate::galg::{GroupAlgebraElement, JMap};
use crate::group::{GroupSpec, MonomialMatrix};
use crate::lin::Lin;
use crate::scalar::{rat, ratio, CtxExt, CycloContext, Rational};
use crate::twist::{
    check_cocycle, cocycle_f, eta_map, kulish_mudrov, mul_lin, smash_mul, smash_mul_twisted,
    twisted_coproduct_antipode, twisted_mul, GroupCarrier, TAlg, TwistCarrier,
};
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub statement: String,
    pub status: Status,
    pub details: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
    pub overall: bool,
}

impl VerificationReport {
    pub fn from_checks(checks: Vec<CheckResult>) -> Self {
        let overall = checks
            .iter()
            .all(|c| !matches!(c.status, Status::Fail));
        VerificationReport { checks, overall }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).unwrap()
    }
}

/// Caps and parameter points for the verification suite.
#[derive(Clone, Debug)]
pub struct CheckOptions {
    /// Parameter values for identities polynomial in c.
    pub c_values: Vec<Rational>,
    /// Largest rank for the character suites.
    pub max_n: usize,
    pub group_cap: u64,
    pub dim_cap: usize,
    pub degree_cap: u32,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            c_values: vec![rat(1), ratio(5, 7)],
            max_n: 3,
            group_cap: 10_000,
            dim_cap: 256,
            degree_cap: 12,
        }
    }
}

pub const CHECK_NAMES: &[&str] = &[
    "cocycle-axioms",
    "twisted-coproduct-antipode",
    "kulish-mudrov",
    "eta-isomorphism",
    "psi-twist",
    "embedding-relations",
    "b-character-permutation",
    "j1-equals-jminusi",
    "d-bijection",
    "inner-witness",
    "coinvariant-regular",
    "ideal-equality",
    "twisted-coinvariant-product",
    "trace-invariance",
    "regular-character-lemma",
    "restricted-dims",
    "center-dims",
    "not-isom",
    "even-case-iso",
    "standard-module-twist",
];

pub fn run_all(opts: &CheckOptions) -> VerificationReport {
    let checks = CHECK_NAMES
        .iter()
        .map(|name| run_check(name, opts))
        .collect();
    VerificationReport::from_checks(checks)
}

#[derive(Debug, Clone, thiserror::Error)]
#[error("unknown check name `{0}`")]
pub struct UnknownCheck(pub String);

pub fn run_named(names: &[String], opts: &CheckOptions) -> Result<VerificationReport, UnknownCheck> {
    let mut checks = Vec::new();
    for n in names {
        if !CHECK_NAMES.contains(&n.as_str()) {
            return Err(UnknownCheck(n.clone()));
        }
        checks.push(run_check(n, opts));
    }
    Ok(VerificationReport::from_checks(checks))
}

fn result(name: &str, statement: &str, ok: bool, details: String) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        statement: statement.to_string(),
        status: if ok { Status::Pass } else { Status::Fail },
        details,
    }
}

pub fn run_check(name: &str, opts: &CheckOptions) -> CheckResult {
    let outcome = std::panic::catch_unwind(|| dispatch(name, opts));
    match outcome {
        Ok(res) => res,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "internal panic".to_string());
            CheckResult {
                name: name.to_string(),
                statement: String::new(),
                status: Status::Fail,
                details: format!("internal error: {msg}"),
            }
        }
    }
}

fn dispatch(name: &str, opts: &CheckOptions) -> CheckResult {
    match name {
        "cocycle-axioms" => check_cocycle_axioms(),
        "twisted-coproduct-antipode" => check_twisted_structures(),
        "kulish-mudrov" => check_kulish_mudrov(),
        "eta-isomorphism" => check_eta_isomorphism(),
        "psi-twist" => check_psi_twist(opts),
        "embedding-relations" => check_embedding(opts),
        "b-character-permutation" => check_b_permutation(opts),
        "j1-equals-jminusi" => check_j1_jmi(opts),
        "d-bijection" => check_d_bijection_report(),
        "inner-witness" => check_inner_witness(),
        "coinvariant-regular" => check_coinvariant_regular(),
        "ideal-equality" => check_ideal_equality(),
        "twisted-coinvariant-product" => check_twisted_product(),
        "trace-invariance" => check_trace_invariance(),
        "regular-character-lemma" => check_reg_char(),
        "restricted-dims" => check_restricted_dims(opts),
        "center-dims" => check_center_dims(opts),
        "not-isom" => check_not_isom(),
        "even-case-iso" => check_even_iso(),
        "standard-module-twist" => check_module_twist(opts),
        other => CheckResult {
            name: other.to_string(),
            statement: String::new(),
            status: Status::Skipped,
            details: "unknown check".into(),
        },
    }
}

fn check_cocycle_axioms() -> CheckResult {
    let mut ok = true;
    let mut details = Vec::new();
    for n in 1..=4 {
        let f = cocycle_f(n);
        let axioms = check_cocycle(&f);
        let involutive = f.mul(&f).is_unit_tensor();
        ok &= axioms && involutive;
        details.push(format!("n={n}: axioms={axioms}, F*F=1(x)1={involutive}"));
    }
    result(
        "cocycle-axioms",
        "F is a counital 2-cocycle on kT with F = F^-1, for n = 1..4",
        ok,
        details.join("; "),
    )
}

fn check_twisted_structures() -> CheckResult {
    let mut ok = true;
    let mut details = Vec::new();
    for n in 1..=4usize {
        let f = cocycle_f(n);
        let u = f.u_element();
        let u_sq = u.mul(&u).is_unit_element();
        // grouplikes are fixed by the twisted coproduct; S_F = S = id
        let mut fixed = true;
        for mask in 0..(1u32 << n) {
            let h = TAlg::of(n, mask, Rational::from_integer(1.into()));
            let (delta, s_f) = twisted_coproduct_antipode(&f, &h);
            let expected =
                crate::twist::TTensor::of(n, (mask, mask), Rational::from_integer(1.into()));
            fixed &= delta == expected && s_f == h;
        }
        ok &= u_sq && fixed;
        details.push(format!("n={n}: U^2=1={u_sq}, Delta_F/S_F fixed on T={fixed}"));
    }
    result(
        "twisted-coproduct-antipode",
        "Delta_F fixes grouplikes, S_F = S on kT, and U = F_1 S(F_2) squares to 1",
        ok,
        details.join("; "),
    )
}

fn check_kulish_mudrov() -> CheckResult {
    let ctx = CycloContext::new(2);
    let g = GroupCarrier::new(&ctx, GroupSpec::b_n(2));
    let f = cocycle_f(2);
    let elems = g.basis_sample();
    let mut ok = true;
    for a in &elems {
        for s in 0..4u32 {
            for b in &elems {
                for t in 0..4u32 {
                    let xa = Lin::basis(&ctx, (a.clone(), s));
                    let xb = Lin::basis(&ctx, (b.clone(), t));
                    let lhs = kulish_mudrov(&f, &g, &smash_mul_twisted(&f, &g, &xa, &xb));
                    let rhs = smash_mul(&g, &kulish_mudrov(&f, &g, &xa), &kulish_mudrov(&f, &g, &xb));
                    ok &= lhs == rhs;
                }
            }
        }
    }
    // bijectivity on the finite smash product
    let mut index = BTreeMap::new();
    for e in &elems {
        for s in 0..4u32 {
            let next = index.len();
            index.insert((e.clone(), s), next);
        }
    }
    let dim = index.len();
    let mut mat = crate::linalg::Matrix::zero(&ctx, dim, dim);
    for (key, &col) in &index {
        let img = kulish_mudrov(&f, &g, &Lin::basis(&ctx, key.clone()));
        for (k2, c) in img.iter() {
            *mat.at_mut(index[k2], col) = c.clone();
        }
    }
    let bij = mat.rank() == dim;
    result(
        "kulish-mudrov",
        "a#h -> (f'|>a)#f''h is an algebra isomorphism (kG(2,1,2))_F # (kT)^F -> kG(2,1,2) # kT",
        ok && bij,
        format!("multiplicative on all {} pairs; bijective={bij}", dim * dim),
    )
}

fn check_eta_isomorphism() -> CheckResult {
    let ctx = CycloContext::new(2);
    // multiplicativity on all basis pairs of (kG(2,1,2))_F
    let g = GroupCarrier::new(&ctx, GroupSpec::b_n(2));
    let f = cocycle_f(2);
    let mut mult_ok = true;
    let elems = g.basis_sample();
    for a in &elems {
        for b in &elems {
            let la = Lin::basis(&ctx, a.clone());
            let lb = Lin::basis(&ctx, b.clone());
            let lhs = eta_map(&f, &g, &twisted_mul(&f, &g, &la, &lb));
            let rhs = mul_lin(&g, &eta_map(&f, &g, &la), &eta_map(&f, &g, &lb));
            mult_ok &= lhs == rhs;
        }
    }
    // generator images on the rank-3 Cherednik carrier
    let params = CherednikParams::constant(&ctx, 2, 1, ctx.one(), ctx.one());
    let alg = CherednikAlgebra::rational(&ctx, 2, 1, 3, params);
    let f3 = cocycle_f(3);
    let mut images_ok = true;
    for k in 0..3usize {
        let img = eta_map(&f3, &alg, &alg.x(k));
        let mut tword = MonomialMatrix::identity(2, 3);
        for j in (0..k).rev() {
            tword = tword.compose(&MonomialMatrix::t_minus_one(2, 3, j));
        }
        let mut w = crate::cherednik::NormalWord::group(tword);
        w.x[k] = 1;
        images_ok &= img == Lin::basis(&ctx, w);
    }
    for mask in 0..8u32 {
        let t = crate::twist::embed_t_word(2, 3, mask);
        images_ok &= eta_map(&f3, &alg, &alg.group_elem(&t)) == alg.group_elem(&t);
    }
    for k in 0..2usize {
        let sbar = MonomialMatrix::refl_s(2, 3, k, k + 1, 1);
        let img = eta_map(&f3, &alg, &alg.group_elem(&sbar));
        let half = ctx.from_rational(ratio(1, 2));
        let expected = alg
            .group_elem(&MonomialMatrix::refl_s(2, 3, k, k + 1, 0))
            .add(&alg.group_elem(&sbar))
            .add(&alg.group_elem(&MonomialMatrix::mystic_sigma(2, 3, k, k + 1, 0)))
            .sub(&alg.group_elem(&MonomialMatrix::mystic_sigma(2, 3, k, k + 1, 1)))
            .scale(&half);
        images_ok &= img == expected;
    }
    result(
        "eta-isomorphism",
        "eta(a) = (f'|>a)u(f'') is multiplicative, with eta(x_k) = x_k t_{k-1}..t_1, eta(t) = t, eta(sbar_k) = (s_k + sbar_k + sigma_k - sigma_k^-1)/2",
        mult_ok && images_ok,
        format!("multiplicative={mult_ok}, generator images={images_ok}"),
    )
}

fn check_psi_twist(opts: &CheckOptions) -> CheckResult {
    let ctx = CycloContext::new(2);
    let mut ok = true;
    let mut details = Vec::new();
    for c in &opts.c_values {
        let params = CherednikParams::constant(&ctx, 2, 1, ctx.one(), ctx.from_rational(c.clone()));
        let alg = CherednikAlgebra::rational(&ctx, 2, 1, 2, params);
        let f = cocycle_f(2);
        let holds = twist_factorisation_check(&alg, &f, 2);
        ok &= holds;
        details.push(format!("c={c}: {holds}"));
    }
    result(
        "psi-twist",
        "Psi_{C_F} = (F|>) . Psi_C . (F^-1|>) for the PBW factorisation of H(G(2,1,2)), degree cap 2",
        ok,
        details.join("; "),
    )
}

fn check_embedding(opts: &CheckOptions) -> CheckResult {
    let mut ok = true;
    let mut details = Vec::new();
    for (m, p, n) in [(2u32, 1u32, 2usize), (2, 2, 2), (4, 2, 2)] {
        let ctx = CycloContext::new(m);
        for c in &opts.c_values {
            let cbar =
                CherednikParams::constant(&ctx, m, p, ctx.one(), ctx.from_rational(c.clone()));
            let emb = EtaPhiEmbedding::new(&ctx, m, p, n, cbar);
            let rel = emb.check_defining_relations().is_ok()
                && emb.check_group_multiplicativity().is_ok();
            ok &= rel;
            let mut line = format!("({m},{p},{n}) c={c}: relations={rel}");
            if (m / p) % 2 == 0 {
                let bij = emb.bijective_on_truncation(2);
                ok &= bij;
                line.push_str(&format!(", bijective(deg<=2)={bij}"));
            }
            details.push(line);
        }
    }
    result(
        "embedding-relations",
        "the braided algebra of mu(G(m,p,n)) embeds into H(G(m,p',n)) via x_i -> x_i t_{i-1}..t_1, sigma_i -> (s_i+sbar_i+sigma_i-sigma_i^-1)/2, t -> t; bijective on a truncation when m/p is even",
        ok,
        details.join("; "),
    )
}

fn check_b_permutation(opts: &CheckOptions) -> CheckResult {
    let ctx = CycloContext::new(2);
    let mut ok = true;
    let mut details = Vec::new();
    for n in 1..=opts.max_n {
        let report = verify_b_twist(&ctx, n);
        ok &= report.all_pass();
        details.push(format!(
            "n={n}: {} characters verified={}",
            report.entries.len(),
            report.all_pass()
        ));
    }
    result(
        "b-character-permutation",
        "chi_(lambda,mu) . J_1 = chi_(lambda,mu*) for every bipartition label of B_n",
        ok,
        details.join("; "),
    )
}

fn check_j1_jmi(opts: &CheckOptions) -> CheckResult {
    let ctx = CycloContext::new(4);
    let mut ok = true;
    let mut details = Vec::new();
    for n in 1..=opts.max_n {
        let report = verify_j1_equals_jminusi(&ctx, n);
        ok &= report.all_pass();
        details.push(format!("n={n}: {}", report.all_pass()));
    }
    result(
        "j1-equals-jminusi",
        "chi . J_1 = chi . J_{-i} for every irreducible character of B_n",
        ok,
        details.join("; "),
    )
}

fn check_d_bijection_report() -> CheckResult {
    let ctx = CycloContext::new(4);
    let mut ok = true;
    let mut details = Vec::new();
    for n in [2usize, 3] {
        let report = verify_d_bijection(&ctx, n);
        ok &= report.all_pass() && !report.entries.is_empty();
        details.push(format!(
            "n={n}: {} labels with lambda != mu, all map to irreducibles={}",
            report.entries.len(),
            report.all_pass()
        ));
    }
    result(
        "d-bijection",
        "pullback along J_{-i} maps chi^{D_n}_(l,m) to the irreducible chi^{mu(D_n)}_(l,m*) for l != m",
        ok,
        details.join("; "),
    )
}

fn check_inner_witness() -> CheckResult {
    let ctx = CycloContext::new(4);
    let classes = GroupClasses::new(GroupSpec::b_n(2));
    let spec = classes.spec;
    let j1 = JMap::j_one(&ctx, 2, 2);
    let jmi = JMap::j_minus_i(&ctx, 2, 2);
    let composite = |g: &MonomialMatrix| {
        jmi.apply(&j1.apply_group(g)).expect_in_spec(spec).unwrap()
    };
    // precondition: the composite fixes every irreducible character
    let table = bn_character_table(&ctx, &classes);
    let fixes = table.iter().all(|(_, chi)| {
        chi.pullback(&classes, &classes, composite) == *chi
    });
    let gens = vec![
        MonomialMatrix::refl_s(2, 2, 0, 1, 0),
        MonomialMatrix::t_minus_one(2, 2, 0),
        MonomialMatrix::t_minus_one(2, 2, 1),
    ];
    let witness = find_inner_witness(&ctx, &classes, &gens, composite);
    let found = witness.is_some();
    result(
        "inner-witness",
        "J_{-i} . J_1 fixes all irreducible characters of B_2, hence is conjugation by an invertible X in Q(i)B_2; such X is found and verified on all 8 elements",
        fixes && found,
        match witness {
            Some(x) => format!("characters fixed={fixes}; X = {x}"),
            None => "no invertible witness found".to_string(),
        },
    )
}

fn check_coinvariant_regular() -> CheckResult {
    let ctx = CycloContext::new(2);
    let mut ok = true;
    let mut details = Vec::new();
    let cases: [(GroupSpec, bool); 4] = [
        (GroupSpec::b_n(1), false),
        (GroupSpec::b_n(2), false),
        (GroupSpec::d_n(2), false),
        (GroupSpec::mystic(2, 2, 2), true),
    ];
    for (spec, skew) in cases {
        let q = CoinvariantQuotient::new(&ctx, spec, skew, false);
        let regular = q.affords_regular_representation();
        ok &= regular;
        details.push(format!(
            "{:?} {:?}: dims {:?}, total {}, regular={regular}",
            spec.flavor, (spec.m, spec.p, spec.n), q.graded_dims, q.dim()
        ));
        if spec.flavor == crate::group::Flavor::Mystic {
            ok &= q.graded_dims == vec![1, 2, 1];
        }
    }
    result(
        "coinvariant-regular",
        "the coinvariant algebra affords the regular representation; graded dims of the mu(G(2,2,2)) quotient are (1,2,1)",
        ok,
        details.join("; "),
    )
}

fn check_ideal_equality() -> CheckResult {
    let ctx = CycloContext::new(2);
    let skew = PolyRing::new(&ctx, 2, true);
    let comm = PolyRing::new(&ctx, 2, false);
    let ideal_w = GradedIdeal::new(&skew, &invariant_generators(&skew, 2, 2), 6);
    let ideal_g = GradedIdeal::new(&comm, &invariant_generators(&comm, 2, 2), 6);
    let equal = ideal_g.equals_per_degree(&ideal_w, 6);
    let q = CoinvariantQuotient::new(&ctx, GroupSpec::mystic(2, 2, 2), true, false);
    let stable = q.ideal_is_t_stable();
    result(
        "ideal-equality",
        "I_G and I_W share the same homogeneous components (degree <= 6) and the shared subspace is T-stable",
        equal && stable,
        format!("per-degree equality={equal}, T-stability={stable}"),
    )
}

fn check_twisted_product() -> CheckResult {
    let ctx = CycloContext::new(2);
    let skew_q = CoinvariantQuotient::new(&ctx, GroupSpec::mystic(2, 2, 2), true, false);
    let comm_q = CoinvariantQuotient::new(&ctx, GroupSpec::d_n(2), false, false);
    let f = cocycle_f(2);
    let ok = check_twisted_coinvariant_product(&skew_q, &comm_q, &f);
    result(
        "twisted-coinvariant-product",
        "the skew coinvariant product equals the F-twisted commutative coinvariant product on all basis pairs",
        ok,
        format!("{} representative pairs compared", skew_q.dim() * skew_q.dim()),
    )
}

fn check_trace_invariance() -> CheckResult {
    use rand::{Rng, SeedableRng};
    let ctx = CycloContext::new(2);
    let q = CoinvariantQuotient::new(&ctx, GroupSpec::d_n(2), false, false);
    let f = cocycle_f(2);
    let spec = q.spec;
    let elems = spec.enumerate();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    let mut ok = true;
    for _ in 0..20 {
        let mut a = GroupAlgebraElement::zero(&ctx, spec);
        for _ in 0..3 {
            let g = elems[rng.gen_range(0..elems.len())].clone();
            let c = ctx.from_rational(ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3)));
            a = a.add(&GroupAlgebraElement::of(&ctx, spec, g).scale(&c));
        }
        ok &= trace_invariance_check(&q, &f, &a);
    }
    result(
        "trace-invariance",
        "Tr(a |>) = Tr(a |>_F) on the coinvariant carrier for randomized group algebra elements",
        ok,
        "20 randomized elements (seeded)".to_string(),
    )
}

fn check_reg_char() -> CheckResult {
    let ctx = CycloContext::new(2);
    let ok = reg_char_intertwine_check(&ctx, 2, 1, 2);
    result(
        "regular-character-lemma",
        "the regular character of kG pulled back along phi equals the regular character of kW, elementwise",
        ok,
        "G = G(2,1,2), phi realized as eta^-1 . J_1".to_string(),
    )
}

fn restricted_rank1(ctx: &crate::scalar::Ctx, c: &Rational) -> RestrictedAlgebra {
    let mut c_zeta = BTreeMap::new();
    c_zeta.insert(1u32, ctx.from_rational(c + c));
    let params = CherednikParams::new(ctx.zero(), ctx.zero(), c_zeta);
    RestrictedAlgebra::new(ctx, 2, 1, 1, AlgebraFlavor::Rational, params)
}

fn check_restricted_dims(opts: &CheckOptions) -> CheckResult {
    let ctx = CycloContext::new(2);
    let mut ok = true;
    let mut details = Vec::new();
    for c in &opts.c_values {
        let ra = restricted_rank1(&ctx, c);
        let dim8 = ra.dim() == 8;
        let (x, y) = (ra.x(0), ra.y(0));
        let s = ra.group_elem(&MonomialMatrix::t_minus_one(2, 1, 0));
        let sq_zero = ra.mul(&x, &x).is_zero() && ra.mul(&y, &y).is_zero();
        let comm = ra.mul(&y, &x)
            == ra
                .mul(&x, &y)
                .sub(&s.scale(&ctx.from_rational(c + c)));
        ok &= dim8 && sq_zero && comm;
        details.push(format!("rank1 c={c}: dim8={dim8}, x^2=y^2=0 {sq_zero}, yx=xy-2cs {comm}"));
    }
    let params = CherednikParams::constant(&ctx, 2, 2, ctx.zero(), ctx.one());
    let ra = RestrictedAlgebra::new(&ctx, 2, 2, 2, AlgebraFlavor::Rational, params.clone());
    let rb = RestrictedAlgebra::new(&ctx, 2, 2, 2, AlgebraFlavor::NegativeBraided, params);
    let dims64 = ra.dim() == 64 && rb.dim() == 64;
    ok &= dims64;
    details.push(format!("rank2 c=1: rational dim {}, braided dim {}", ra.dim(), rb.dim()));
    result(
        "restricted-dims",
        "dim 8 for the rank-1 restricted algebra with its presentation relations; dim 64 for the rank-2 rational and braided restricted algebras",
        ok,
        details.join("; "),
    )
}

fn check_center_dims(opts: &CheckOptions) -> CheckResult {
    let ctx = CycloContext::new(2);
    let ra = restricted_rank1(&ctx, &rat(1));
    let fa = ra.to_finite_algebra(opts.dim_cap);
    let z1 = center_basis(&fa, &ra.generating_indices());
    let params = CherednikParams::constant(&ctx, 2, 2, ctx.zero(), ctx.one());
    let ra2 = RestrictedAlgebra::new(&ctx, 2, 2, 2, AlgebraFlavor::Rational, params);
    let fa2 = ra2.to_finite_algebra(opts.dim_cap);
    let z2 = center_basis(&fa2, &ra2.generating_indices());
    let ok = z1.len() == 2 && z2.len() == 4;
    result(
        "center-dims",
        "the center of the rank-1 restricted algebra is 2-dimensional and of the rank-2 one 4-dimensional (tensor square)",
        ok,
        format!("dim Z(rank1) = {}, dim Z(rank2) = {}", z1.len(), z2.len()),
    )
}

fn check_not_isom() -> CheckResult {
    let report = verify_not_isom_witness(&rat(1));
    let details = format!(
        "z central={}, z^2=c^2={}, gamma central={}, gamma^2 not scalar={}, gamma^4=c^4={}, gamma order-4 unit={}, dim Z = {}, four rank-1 idempotents={}, min-poly(gamma)=T^4-c^4 as stated={} (computed min poly coeffs low-to-high: {:?}, i.e. (T-c^2)(T^2+c^2))",
        report.z_central,
        report.z_squared_is_c2,
        report.gamma_central,
        report.gamma_sq_not_scalar,
        report.gamma_fourth_is_c4,
        report.gamma_is_order_four_unit,
        report.rational_center_dim,
        report.four_rank_one_idempotents,
        report.gamma_min_poly_is_t4_minus_c4,
        report.gamma_min_poly,
    );
    result(
        "not-isom",
        "at c = 1 the rational and braided restricted algebras of rank 2 are not isomorphic over Q: z^2 = 1 on one side; the transcribed gamma is a central order-4 unit on the other; the untwisted center splits into four rank-1 idempotents; the stated minimal polynomial T^4 - c^4 is asserted literally",
        report.overall(),
        details,
    )
}

fn check_even_iso() -> CheckResult {
    let ctx = CycloContext::new(2);
    let ra = restricted_rank1(&ctx, &rat(1));
    let ok1 = check_restricted_iso_even_case(&ra, 64 * 64);
    let mut c_zeta = BTreeMap::new();
    c_zeta.insert(1u32, ctx.from_int(2));
    let params = CherednikParams::new(ctx.zero(), ctx.one(), c_zeta);
    let ra2 = RestrictedAlgebra::new(&ctx, 2, 1, 2, AlgebraFlavor::Rational, params);
    let ok2 = check_restricted_iso_even_case(&ra2, 0);
    result(
        "even-case-iso",
        "for m/p even, eta is an algebra isomorphism from the twisted restricted algebra onto the restricted algebra",
        ok1 && ok2,
        format!(
            "G(2,1,1): all-pairs multiplicativity + bijectivity = {ok1}; G(2,1,2) (dim 512): generator-pair multiplicativity + blockwise bijectivity = {ok2}"
        ),
    )
}

fn check_module_twist(opts: &CheckOptions) -> CheckResult {
    let ctx = CycloContext::new(4);
    let b2 = GroupSpec::b_n(2).enumerate();
    let mut ok = true;
    let mut details = Vec::new();
    for (label, rep) in [
        ("trivial", GroupRep::trivial(&ctx, &b2)),
        ("sign", GroupRep::sign(&ctx, &b2)),
    ] {
        for c in &opts.c_values {
            let cbar =
                CherednikParams::constant(&ctx, 2, 1, ctx.one(), ctx.from_rational(c.clone()));
            let holds = check_standard_module_twist(&ctx, 2, 1, 2, cbar, &rep, 2);
            ok &= holds;
            details.push(format!("tau={label}, c={c}: {holds}"));
        }
    }
    result(
        "standard-module-twist",
        "the cocycle twist of the standard module of H(B_2), transported along phi, equals the braided standard module at tau . J_{-i} (degree cap 2)",
        ok,
        details.join("; "),
    )
}
