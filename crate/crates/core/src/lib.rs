//! Sequential matrices over `Z/(n^2+1)Z`, the dihedral group acting on them,
//! completely multiplicative sign maps such as the Jacobi symbol, and the
//! multiplication permutations whose signatures recover that symbol.
//!
//! ```
//! use seqsym::{DihedralElement, ResidueMatrix};
//!
//! let q = ResidueMatrix::sequential(4).unwrap();
//! let n = q.modulus().reduce(4);
//! assert_eq!(q.apply(DihedralElement::Rho), q.scalar_mul(n).unwrap());
//! ```

pub mod error;
pub mod modring;
pub mod multfunc;
pub mod render;
pub mod seqmatrix;
pub mod verify;
pub mod zolotarev;

pub use error::{Error, Result};
pub use modring::{gcd, mul, pow, reduce, Modulus, Residue};
pub use multfunc::{
    apply_map, check_basic_symmetry, check_corollary, check_jacobi_theorem, jacobi, jacobi_matrix, legendre_euler,
    qr_bruteforce, JacobiMap, MultiplicativeMap, Sign, SignMatrix, UnitIndicator,
};
pub use render::{parse_residue, parse_sign, render_residue, render_sign, RenderFormat};
pub use seqmatrix::{check_theorem1, check_value_table, induced_permutation, DihedralElement, ResidueMatrix, SquareGrid};
pub use verify::{run_check, Check, ParamRange, VerificationReport};
pub use zolotarev::{check_cycle_structure, check_lemma, check_zolotarev, mult_perm, CycleDecomposition, Permutation};
