"""
Monte-Carlo failure rates against the bound
===========================================

Runs the seeded sweep in ``configs/desk.json`` and prints the CSV report.
Everything is reproducible from the seed: rerunning, or running with more
workers, gives byte-identical output.
"""

from pathlib import Path

from fracdec.simulation import SimConfig, sweep

here = Path(__file__).parent
cfg = SimConfig.load(here / "configs" / "desk.json")
report = sweep(cfg)

print(f"q = {report.q}, tau_P = {report.tau_p}")
print(report.to_csv())
for row in report.rows:
    side = "beyond" if row.beyond_radius else "within"
    print(f"t={row.t:>2} ({side} tau_P): failures by reason {row.failures}, "
          f"projected column weights {row.column_weights}")

# %%
# Write JSON and CSV next to the config
# -------------------------------------
jpath, cpath = report.write(here / "out" / "desk")
print("wrote", jpath, "and", cpath)
