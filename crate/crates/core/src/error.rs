// Copyright 2026 The mdqft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A qubit count, matrix dimension or element count exceeds the configured cap.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("index out of bounds: {0}")]
    Bounds(String),
    #[error("invalid input: {0}")]
    Validation(String),
    /// The input cannot be normalized into a quantum state.
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("layout mismatch: {0}")]
    Layout(String),
    /// Unreadable or malformed file.
    #[error("{0}")]
    Io(String),
}
