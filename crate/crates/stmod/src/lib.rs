//! Modular representation theory of finite groups at desk scale.
//!
//! The crate builds the stable module category of a group algebra kG
//! over a small finite field and decides Freyd's generating hypothesis
//! for groups with periodic cohomology, with machine-checkable
//! certificates: period certificates, block decompositions, heart
//! modules, and ghost maps with per-degree Tate-vanishing evidence.
//!
//! Layering, bottom up:
//!
//! * [`field`], [`matrix`], [`poly`] — exact linear algebra over GF(p^m)
//!   and Berlekamp factorization.
//! * [`perm`], [`group`], [`presets`] — permutation groups closed into
//!   full multiplication tables, with Sylow machinery.
//! * [`module`] — kG-modules as generator action matrices and the
//!   functor calculus (duals, tensors, induction, subquotients).
//! * [`meataxe`] — irreducibility, composition factors, radicals,
//!   endomorphism rings, certified Krull-Schmidt decomposition,
//!   projective covers.
//! * [`blocks`] — central primitive idempotents and block membership.
//! * [`stable`] — syzygies, stable homs, Tate cohomology, periods,
//!   ghosts and the universal ghost triangle.
//! * [`gh`] — the generating-hypothesis engine: Sylow classification,
//!   Swan periods, Curtis-Reiner counts, heart witnesses, verdicts.
//! * [`report`], [`cache`] — JSON reports and the computation cache
//!   behind the `stmod` binary.
//!
//! See the `examples/` directory for one runnable walkthrough per
//! capability; `cargo run -- --help` lists the command-line surface.

pub mod blocks;
pub mod cache;
pub mod error;
pub mod field;
pub mod gh;
pub mod group;
pub mod matrix;
pub mod meataxe;
pub mod module;
pub mod perm;
pub mod poly;
pub mod presets;
pub mod report;
pub mod stable;

pub use error::{Error, Result};
pub use field::{splitting_degree, Field};
pub use group::{classify_p_group, conj_auto_count, normalizer, centralizer, sylow, Group, PGroupClass, Subgroup};
pub use meataxe::Algebra;
pub use module::{hom_space, induce, restrict, EmbeddedSubgroup, ModuleMap, ModuleRep};
pub use presets::{parse_group_spec, GroupSpec};

#[cfg(test)]
pub(crate) mod testutil {
    use rand::SeedableRng;

    pub fn rng(seed: u64) -> rand_chacha::ChaCha8Rng {
        rand_chacha::ChaCha8Rng::seed_from_u64(seed)
    }
}
