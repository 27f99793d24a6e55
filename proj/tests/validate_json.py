# Copyright 2026 The grmjacobi Authors
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

"""Run the CLI with --output json and validate stdout against a schema.

usage: validate_json.py SCHEMA EXPECTED_EXIT CLI ARGS...
"""

import json
import subprocess
import sys

import jsonschema


def main() -> int:
    schema_path, expected_rc, *cmd = sys.argv[1:]
    proc = subprocess.run(cmd + ["--output", "json"], capture_output=True, text=True)
    if proc.returncode != int(expected_rc):
        print(f"exit {proc.returncode}, wanted {expected_rc}\n{proc.stderr}")
        return 1
    with open(schema_path) as f:
        schema = json.load(f)
    doc = json.loads(proc.stdout)
    jsonschema.Draft202012Validator(schema).validate(doc)
    # Repeated runs must be byte-identical.
    again = subprocess.run(cmd + ["--output", "json", "--threads", "3"], capture_output=True, text=True)
    if again.stdout != proc.stdout:
        print("output changed between runs with different worker counts")
        return 1
    print("ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())
