#!/usr/bin/env python3
"""The sixty amalgamable classes and the classifier around them.

Every HS-closed class of finite commutative idempotent chains either is
one of sixty parameterized member sets (and then has the amalgamation
property) or violates one of seven closure rules, and the auditor will
name a violated rule plus, usually, a concretely refuted span.
"""

from collections import Counter

from resichain.classification import (
    all_sixty,
    ap_verdict,
    closure_rule_violations,
    hs_closure,
    parse_class,
)
from resichain.constructors import com, go


def main():
    classes = all_sixty()
    fams = Counter(cls.family for cls in classes)
    print("sixty classes by family:", dict(fams))
    print()

    print("a few class texts with their largest member size:")
    for text in ("e:1", "fin:1,0,1+e:1", "fin:w,w,w", "inf:0,0,w+e:w"):
        cls = parse_class(text)
        size = cls.max_member_size if cls.is_finite else "unbounded"
        print(f"  {text:16s} finite: {cls.is_finite!s:5s} max member: {size}")
    print()

    closure = hs_closure([com(1, 1)])
    verdict = ap_verdict(closure)
    print("closure of {com(1,1)} has", len(closure.members), "members;",
          "verdict:", verdict.as_dict())
    print()

    closure = hs_closure([go(2)])
    verdict = ap_verdict(closure)
    print("closure of {go(2)}: not one of the sixty.")
    for v in verdict.audit[:3]:
        print("  rule", v.rule, "wants", v.missing.text(),
              "from", list(v.premises))
    if len(verdict.audit) > 3:
        print("  ... and", len(verdict.audit) - 3, "more instantiations")
    span = verdict.witness
    print("  witness span legs:", span.i_B.image, span.i_C.image,
          "refuted after", verdict.refutation.checked, "candidates")
    print()

    closure = hs_closure([com(0, 2)])
    print("closure of {com(0,2)} audit (first finding):")
    first = closure_rule_violations(closure)[0].as_dict()
    print("  rule", first["rule"] + ":", first["statement"])
    print("  missing:", first["missing"])
    print()
    print("adding the missing chains and reclosing repairs each rule; the")
    print("sixty classes are exactly the audits that come back clean.")


if __name__ == "__main__":
    main()
