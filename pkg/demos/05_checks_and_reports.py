"""The statement-checking harness: instance files in, verdict reports out.

Each check recomputes both sides of one identity from independent oracles and
gates on its hypotheses; the same pipeline backs the `liaison run` CLI.  This
script builds a small instance file inline, runs the suite, and prints the
JSON report.
"""

import json

from liaison.checks import run_suite
from liaison.cli import build_report, render_markdown
from liaison.instancefile import parse_instance

TEXT = """\
# the principal pair: coordinate axes linked by their product
ring R = QQ[x, y] grevlex;
ideal a = x;
ideal b = y;
ideal I = x*y;
module M = quotient 0;
regseq s = x*y;
check L07(a = a, b = b, I = I, M = M, seq = s);
check GRADE_FORMULA_T(a = a, b = b, I = I, M = M, seq = s);
check T5_CD(a = a, b = b, I = I, M = M, seq = s);
check C1_WITNESS();
"""

parsed = parse_instance(TEXT)
verdicts = run_suite(parsed)
report = build_report(parsed, verdicts)

print("# JSON report (same shape as `liaison run FILE --format json`)")
print(json.dumps(report, indent=2))

print()
print("# markdown rendering")
print(render_markdown(report))
