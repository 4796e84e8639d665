# Copyright 2026 The grundy-spectral Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Grundy number bounds from matching polynomials and adjacency spectra.

Thin wrapper over the compiled ``_core`` extension. Polynomials come back as
lists of Python ints in ascending powers; reports and atoms as plain dicts.
"""

from ._core import (
    ConfigError,
    Graph,
    GraphError,
    LimitError,
    OverflowError,
    atom_lambda_lower,
    binomial_tree,
    bound_report,
    bound_spectral_recurrence,
    char_polynomial,
    chromatic_number,
    complete,
    complete_bipartite,
    cycle,
    degeneracy,
    enumerate_atoms,
    erdos_renyi,
    first_fit,
    grundy_bruteforce,
    grundy_exact,
    is_atom,
    is_connected,
    lambda_max,
    matching_polynomial,
    min_quotient_sum,
    mu_max_root,
    path,
    pathtree_identity_holds,
    quotient_sum,
    run_verify_suite,
    star,
    sweep_csv,
    tk_lambda,
    tk_table_csv,
    verify_suite_names,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
