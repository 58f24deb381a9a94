#!/usr/bin/env python3
"""
Stand-alone check of the quaternion example: Q8:C3 where Q8 controls fusion
of its involution subgroup but the group is not 2-nilpotent
"""

import logging
import sys
import time
from pathlib import Path

# Add src to path
sys.path.append(str(Path(__file__).parent / "src"))

from src.catalog import build, build_named, quaternion_right_multiplication
from src.catalog.specs import GroupSpec
from src.core.config import config
from src.fusion import FusionClass, controls_fusion, enumerate_class, revalidate_witness
from src.harness import Verdict, verify_example_quaternion, verify_theorem_b
from src.nilpotency import is_p_nilpotent, upper_central_series
from src.perm import center, subgroup_closure

# Configure logging
logging.basicConfig(level=logging.INFO, format='%(levelname)s: %(message)s')
logger = logging.getLogger(__name__)


class QuaternionExampleCheck:
    """Checks on the order-24 group Q8:C3"""

    def __init__(self):
        self.G = None
        self.Q = None
        self.passed = 0
        self.failed = 0

    def assert_test(self, condition: bool, test_name: str, message: str = ""):
        """Assert a test condition"""
        if condition:
            print(f"✅ {test_name}")
            if message:
                print(f"   {message}")
            self.passed += 1
        else:
            print(f"❌ {test_name}")
            if message:
                print(f"   {message}")
            self.failed += 1
        return condition

    def check_configuration(self):
        print("\n🔧 Checking Configuration")
        print("-" * 40)

        errors = config.validate_limits()
        self.assert_test(
            len(errors) == 0,
            "Limit Validation",
            f"Errors: {errors}" if errors else f"Limits: {config.get_limits()}"
        )
        return not errors

    def check_construction(self):
        print("\n🏗️  Checking Construction")
        print("-" * 40)

        self.G = build(GroupSpec.quaternion8_c3())
        self.Q = subgroup_closure(
            self.G, [quaternion_right_multiplication("i"), quaternion_right_multiplication("j")]
        )
        self.assert_test(self.G.order == 24, "Group Order", f"|G| = {self.G.order}")
        self.assert_test(self.Q.order == 8, "Quaternion Subgroup Order", f"|Q| = {self.Q.order}")

        involutions = enumerate_class(self.G, FusionClass.cyclic_p(2))
        self.assert_test(
            len(involutions) == 1,
            "Unique Involution Subgroup",
            f"{len(involutions)} subgroup(s) of order 2"
        )

        Z = center(build_named("Q8"))
        self.assert_test(Z.order == 2, "Center of Q8", f"|Z(Q8)| = {Z.order}")

        regular = build_named("Q8:C3/regular")
        self.assert_test(
            regular.order == 24 and regular.degree == 24,
            "Regular Construction",
            f"order {regular.order} on {regular.degree} points"
        )

    def check_fusion(self):
        print("\n🔀 Checking Fusion Control")
        print("-" * 40)

        order_two = controls_fusion(self.G, self.Q, FusionClass.cyclic_p(2))
        self.assert_test(order_two.holds, "Q8 Controls Order-2 Fusion", str(order_two.to_dict()))

        cp_report = controls_fusion(self.G, self.Q, FusionClass.cp(2))
        self.assert_test(
            cp_report.condition_a and not cp_report.condition_b,
            "Cp(2) Condition (b') Fails",
            f"a={cp_report.condition_a} b={cp_report.condition_b}"
        )

        witness = cp_report.witness_b
        self.assert_test(
            witness is not None and witness[0].order == 4,
            "Cyclic Order-4 Witness",
            f"witness subgroup order: {witness[0].order if witness else None}"
        )
        self.assert_test(
            revalidate_witness(self.G, self.Q, cp_report),
            "Witness Re-validates"
        )

    def check_nilpotency(self):
        print("\n🧮 Checking 2-Nilpotency")
        print("-" * 40)

        verdict = is_p_nilpotent(self.G, 2)
        self.assert_test(not verdict.p_nilpotent, "Not 2-Nilpotent", str(verdict.to_dict()))

        series = upper_central_series(self.G)
        self.assert_test(
            series.orders() == [1, 2],
            "Upper Central Series",
            f"orders: {series.orders()}"
        )

        theorem = verify_theorem_b(self.G, 2, group_name="Q8:C3")
        self.assert_test(
            theorem.verdict is Verdict.PASS,
            "Theorem B Cell",
            f"p-nilpotent={theorem.hypothesis_held} controls={theorem.conclusion_held}"
        )

    def check_harness(self):
        print("\n📋 Checking Harness Verdict")
        print("-" * 40)

        start = time.perf_counter()
        result = verify_example_quaternion()
        elapsed = time.perf_counter() - start
        self.assert_test(
            result.verdict is Verdict.PASS,
            "Example Verdict",
            f"{result.verdict.value} in {elapsed:.3f}s"
        )
        for name, held in result.details.items():
            self.assert_test(bool(held), f"  {name}")

    def run_all_checks(self):
        """Run all checks"""
        print("🚀 Quaternion Example Checks")
        print("=" * 50)

        if self.check_configuration():
            self.check_construction()
            self.check_fusion()
            self.check_nilpotency()
            self.check_harness()

        print("\n📊 Results Summary")
        print("=" * 30)

        total = self.passed + self.failed
        pass_rate = (self.passed / total * 100) if total > 0 else 0

        print(f"✅ Passed: {self.passed}")
        print(f"❌ Failed: {self.failed}")
        print(f"📈 Pass Rate: {pass_rate:.1f}%")

        if self.failed == 0:
            print("\n🎉 ALL CHECKS PASSED!")
            return True
        print("\n❌ CHECKS FAILED")
        return False


def main():
    """Main check function"""
    checker = QuaternionExampleCheck()
    success = checker.run_all_checks()
    sys.exit(0 if success else 1)


if __name__ == "__main__":
    main()
