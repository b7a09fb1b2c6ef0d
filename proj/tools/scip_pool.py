#!/usr/bin/env python3
# Copyright 2026 The graphbo Authors.
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

"""Solves an LP-format model with SCIP and writes a solution pool.

Usage: scip_pool.py MODEL SOLUTION TIME_LIMIT POOL_SIZE

The pool holds up to POOL_SIZE solutions with pairwise distinct structure
binaries (variables named A_* and F_*), found by re-solving after a no-good
cut on each incumbent. One solution per line, as name=value pairs.
"""

import sys
import time

import pyscipopt


def structure_vars(model):
    return [v for v in model.getVars()
            if v.vtype() == "BINARY" and v.name.split("_")[0] in ("A", "F")]


def main(argv):
    if len(argv) != 5:
        sys.stderr.write(__doc__)
        return 2
    model_path, solution_path = argv[1], argv[2]
    time_limit, pool_size = float(argv[3]), int(argv[4])
    deadline = time.monotonic() + time_limit

    model = pyscipopt.Model()
    model.hideOutput()
    model.readProblem(model_path)
    lines = []
    for _ in range(max(pool_size, 1)):
        remaining = deadline - time.monotonic()
        if remaining <= 0:
            break
        model.setParam("limits/time", remaining)
        model.optimize()
        if model.getNSols() == 0:
            break
        sol = model.getBestSol()
        values = {v.name: model.getSolVal(sol, v) for v in model.getVars()}
        status = model.getStatus()
        lines.append("# status=%s objective=%.17g" % (status, model.getSolObjVal(sol)))
        lines.append(" ".join("%s=%.17g" % (k, x) for k, x in values.items()))
        if status != "optimal":
            break
        model.freeTransform()
        binaries = structure_vars(model)
        ones = [v for v in binaries if values[v.name] > 0.5]
        zeros = [v for v in binaries if values[v.name] <= 0.5]
        model.addCons(pyscipopt.quicksum(zeros) - pyscipopt.quicksum(ones)
                      >= 1 - len(ones), name="nogood_pool_%d" % len(lines))
    with open(solution_path, "w") as f:
        f.write("\n".join(lines) + ("\n" if lines else ""))
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
