# Copyright 2026 The betaroc Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Beta-distribution models of binary classifier responses.

Maximum-likelihood beta fits, empirical and theoretical ROC curves, and
the endpoint (semi-derivative) classification of classifier behaviour.
"""

from ._betaroc import *  # noqa: F401,F403
from ._betaroc import __version__  # noqa: F401
