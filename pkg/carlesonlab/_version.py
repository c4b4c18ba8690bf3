# Copyright (C) 2026, the carlesonlab developers.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Version information."""

__title__ = "carlesonlab"
__description__ = ("Numerical laboratory for weighted variation-norm estimates of Fourier partial"
                   " sums and their phase-plane decompositions.")
__url__ = "https://github.com/carlesonlab/carlesonlab"
__version__ = "0.3.0"
__author__ = "The carlesonlab developers"
__author_email__ = "carlesonlab@users.noreply.github.com"
__license__ = "Apache 2.0"
