"""Find the rotation angle that erases the penny completely.

Rotating by a fixed angle theta about a uniformly random axis contracts the
Bloch vector by k(theta) = (1 + 2 cos theta) / 3.  The state becomes fully
mixed exactly where k crosses zero, and this script discovers that angle
numerically: a coarse scan brackets the sign change, then bisection refines
it to nanoradian precision.
"""

import math

from pennyflip import MAXIMALLY_MIXED, angle_scan, trace_distance, twirl_analytic


def main():
    scan = angle_scan(0.0, math.pi, 181)

    print("theta (deg)   purity    distance to I/2")
    print("-" * 42)
    for i in range(0, 181, 15):
        deg = math.degrees(scan.thetas[i])
        print(f"{deg:10.1f}   {scan.purities[i]:.6f}   {scan.trace_distances[i]:.6f}")

    print()
    deg_root = math.degrees(scan.refined_root)
    print(f"Bisected zero of the contraction: {deg_root:.9f} degrees")
    print(f"Grid angle closest to fully mixed: {math.degrees(scan.argmin_theta):.1f} degrees")

    rho = twirl_analytic(math.radians(120.0))
    print(f"Distance to I/2 at exactly 120 degrees: {trace_distance(rho, MAXIMALLY_MIXED):.2e}")
    print()
    print("Anything short of 120 degrees leaves Q a positive bias toward the")
    print("original state; anything past it biases the antipode instead.  Only")
    print("the 120-degree twirl makes the round a genuinely fair coin toss.")


if __name__ == "__main__":
    main()
