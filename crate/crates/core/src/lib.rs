//! An exact-arithmetic workbench for complex and mystic reflection groups,
//! cocycle twists of their group algebras, Cherednik-type algebras with PBW
//! normal forms, coinvariant algebras, and the character theory connecting
//! them. Everything is computed over `Q(zeta_m)`; there is no floating
//! point.
//!
//! The scalar context fixes the cyclotomic field once per computation:
//!
//! ```
//! use twistral::scalar::{CycloContext, CtxExt};
//!
//! let ctx = CycloContext::new(4); // Q(i)
//! let i = ctx.root_of_unity(1);
//! assert_eq!(i.mul(&i), ctx.from_int(-1));
//! assert_eq!(i.inv().unwrap(), ctx.root_of_unity(3));
//! ```
//!
//! Groups are monomial matrices `(perm, exps)` acting by
//! `g(x_i) = zeta_m^{exps[i]} x_{perm[i]}`, and the `J_c` maps deform their
//! group algebras:
//!
//! ```
//! use twistral::galg::JMap;
//! use twistral::group::{GroupSpec, MonomialMatrix};
//! use twistral::scalar::CycloContext;
//!
//! let ctx = CycloContext::new(2);
//! let b2 = GroupSpec::b_n(2);
//! assert_eq!(b2.enumerate().len(), 8);
//!
//! // J_1(s_1) = s_1 (1 + t_1 + t_2 - t_1 t_2) / 2, and it squares to 1
//! let j1 = JMap::j_one(&ctx, 2, 2);
//! let s = MonomialMatrix::refl_s(2, 2, 0, 1, 0);
//! let image = j1.apply_group(&s).expect_in_spec(b2).unwrap();
//! assert_eq!(image.len(), 4);
//! assert!(image.mul(&image).coeff(&b2.identity()).is_one());
//! ```
//!
//! The named verification checks live in [`report`]; the `twistral` binary
//! exposes them together with character tables, coinvariant algebras,
//! centers, and the twist maps.

pub mod scalar;
pub mod linalg;
pub mod group;
pub mod galg;
pub mod lin;
pub mod cherednik;
pub mod chars;
pub mod coinv;
pub mod report;
pub mod twist;
pub mod parse;

pub use scalar::{CycloContext, CycloScalar, Ctx, CtxExt, Rational, ScalarError};
