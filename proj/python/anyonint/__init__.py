# Copyright 2026 The anyonint Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Anyonic-charge interferometric decoherence toolkit.

Python surface over the C++ core: anyon-model algebraic data with
consistency verification, the closed-form N-probe density-matrix
evolution with its asymptotic and stray-anyon limits, and brute-force
oracles that recompute the closed forms independently.
"""

from anyonint._core import (  # noqa: F401
    DEFAULT_TOL,
    AnyonModel,
    BasisLabel,
    BeamSplitter,
    BlockWeight,
    ChannelConvergence,
    ChannelKey,
    ChannelStatus,
    CheckResult,
    ComparisonReport,
    ConvergenceReport,
    DensityMatrixReport,
    DifferenceChannelMatrix,
    Direction,
    DomainError,
    Error,
    InterferometerConfig,
    ModelError,
    PairBasisMatrix,
    PairBlock,
    ParseError,
    Placement,
    ProbeSpec,
    TargetState,
    VerificationReport,
    __version__,
    asymptotic,
    binomial_channel_factor,
    builtin_model,
    builtin_model_names,
    channel_factor,
    check_density_matrix,
    closed_form_vs_oracle,
    decompose_initial,
    evolve,
    load_model,
    load_model_file,
    models_equal,
    path_enumeration_factor,
    serialize_model,
    stray_anyon_pass,
    verify_model,
)
