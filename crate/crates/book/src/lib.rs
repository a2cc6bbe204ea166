//! Compiles the code listings of the guide in `book/src` as doc-tests.

#[doc = include_str!("../../../book/src/intro.md")]
pub mod intro {}
#[doc = include_str!("../../../book/src/involutions.md")]
pub mod involutions {}
#[doc = include_str!("../../../book/src/grassmannians.md")]
pub mod grassmannians {}
#[doc = include_str!("../../../book/src/slice.md")]
pub mod slice {}
#[doc = include_str!("../../../book/src/posets.md")]
pub mod posets {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
