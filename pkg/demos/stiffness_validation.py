"""
Bearing stiffness from displacement sweeps
==========================================

Impose growing axial, radial and tilt displacements on the reference
crossed-roller wire race bearing and fit a secant stiffness to each sweep.
"""

# %%
# The reference bearing ships with the package: 94 rollers of 14 mm on a
# 420 mm pitch diameter, running on 8 mm wires.
from wirerace import REFERENCE_GEOMETRY, REFERENCE_STIFFNESS
from wirerace.analysis import moment_stiffness_per_degree, secant_stiffness, sweep

geometry, stiffness = REFERENCE_GEOMETRY, REFERENCE_STIFFNESS
print(geometry)

# %%
# An axial sweep up to 0.05 mm. Each row pairs the imposed displacement
# with the axial reaction.
axial = sweep("axial", 0.05, 6, geometry, stiffness)
for d, f in axial.rows():
    print(f"{d:8.4f} mm  {f:12.1f} N")

k_axial, dev = secant_stiffness(axial)
print(f"axial stiffness {k_axial / 1e3:.0f} kN/mm (max deviation from the line {dev:.2%})")

# %%
# The radial sweep carries about half the axial stiffness, since only one
# half of the ring is pushed and the contacts sit at 45 degrees.
k_radial, _ = secant_stiffness(sweep("radial", 0.05, 6, geometry, stiffness))
print(f"radial stiffness {k_radial / 1e3:.0f} kN/mm, ratio {k_radial / k_axial:.3f}")

# %%
# Tilt angles are in radians inside the library. The moment stiffness is
# usually quoted per degree of tilt in N*m.
k_moment, _ = secant_stiffness(sweep("moment", 2.5e-4, 6, geometry, stiffness))
print(f"moment stiffness {moment_stiffness_per_degree(k_moment):.0f} N*m/deg")

# %%
# A thin-ring estimate from the axial value lands close by.
print(f"thin-ring estimate {moment_stiffness_per_degree(k_axial * geometry.pitch_diameter ** 2 / 8):.0f} N*m/deg")
