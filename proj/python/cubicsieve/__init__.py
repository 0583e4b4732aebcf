# Copyright 2026 The cubicsieve Authors
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

"""Space-efficient segmented sieve of Eratosthenes."""

from ._cubicsieve import (
    ConfigError,
    SieveStats,
    block_params,
    default_delta,
    dioph_appr,
    frac_part,
    mertens,
    mobius_segment,
    new_seg_siev,
    new_seg_siev_fac,
    primes_up_to,
    seg_siev,
    seg_siev_fac,
)

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "SieveStats",
    "block_params",
    "default_delta",
    "dioph_appr",
    "frac_part",
    "mertens",
    "mobius_segment",
    "new_seg_siev",
    "new_seg_siev_fac",
    "primes_up_to",
    "seg_siev",
    "seg_siev_fac",
]
