//! Word problem, positive cone and left-orderings for the groups
//! `Γ_n = <a, b : b a^n b = a>`.

pub mod algint;
pub mod braid3;
pub mod cli;
pub mod cone;
pub mod context;
pub mod error;
pub mod hecke;
pub mod lab;
pub mod normal_form;
pub mod orderings;
pub mod word;

pub use cone::{cmp_dd, decide_sign, SignResult, Verdict};
pub use context::GroupContext;
pub use error::{Error, Result};
pub use hecke::{oracle_equal, oracle_is_identity};
pub use normal_form::{to_normal_form, NormalForm};
pub use orderings::OrderingSpec;
pub use word::{parse_word, Generator, Word};
