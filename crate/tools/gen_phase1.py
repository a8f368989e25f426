"""Phase 1 of table generation: construct and certify all needed diagrams.

Knots are pinned by Conway twist vectors / Montesinos slots / braid words
plus determinant and alternating-span certificates.  Links are assembled
by enumerating candidate families, certifying crossing number (span for
alternating diagrams, non-membership in the complete <=6-crossing catalog
otherwise) and excluding connected sums via their computed invariants.
"""

import itertools
import json
import diagrams as D


def info(diag):
    b = D.bracket(diag)
    pd, signs, k = D.oriented_pd(diag)
    return {
        "det": D.determinant(diag),
        "span": D.bracket_span(b),
        "ncross": diag.ncross,
        "comps": k,
        "writhe": sum(signs),
        "key": D.invariant_key(diag),
        "pd": pd,
    }


KNOTS = {}  # name -> (diagram, expected_det)

RATIONAL_KNOTS = {
    "3_1": ([3], 3), "4_1": ([2, 2], 5), "5_1": ([5], 5), "5_2": ([3, 2], 7),
    "6_1": ([4, 2], 9), "6_2": ([3, 1, 2], 11), "6_3": ([2, 1, 1, 2], 13),
    "7_1": ([7], 7), "7_2": ([5, 2], 11), "7_3": ([4, 3], 13),
    "7_4": ([3, 1, 3], 15), "7_5": ([3, 2, 2], 17), "7_6": ([2, 2, 1, 2], 19),
    "7_7": ([2, 1, 1, 1, 2], 21),
    "8_1": ([6, 2], 13), "8_2": ([5, 1, 2], 17), "8_3": ([4, 4], 17),
    "8_4": ([4, 1, 3], 19), "8_6": ([3, 3, 2], 23), "8_7": ([4, 1, 1, 2], 23),
    "8_8": ([2, 3, 1, 2], 25), "8_9": ([3, 1, 1, 3], 25),
    "8_11": ([3, 2, 1, 2], 27), "8_12": ([2, 2, 2, 2], 29),
    "8_13": ([3, 1, 1, 1, 2], 29), "8_14": ([2, 2, 1, 1, 2], 31),
}

MONTESINOS_KNOTS = {
    "8_5": ([[3], [3], [2]], 21), "8_10": ([[3], [2, 1], [2]], 27),
    "8_15": ([[2, 1], [2, 1], [2]], 33), "8_19": ([[3], [3], [-2]], 3),
    "8_20": ([[3], [2, 1], [-2]], 9), "8_21": ([[2, 1], [2, 1], [-2]], 15),
}

BRAID_KNOTS = {
    "8_16": ((3, [1, 1, -2, 1, 1, -2, 1, -2]), 35),
    "8_17": ((3, [1, 1, -2, 1, -2, 1, -2, -2]), 37),
    "8_18": ((3, [1, -2, 1, -2, 1, -2, 1, -2]), 45),
}

ALTERNATING_KNOTS_8 = {  # nonalternating: 8_19, 8_20, 8_21
    "8_19", "8_20", "8_21",
}


def build_knots():
    out = {}
    for name, (vec, det) in RATIONAL_KNOTS.items():
        out[name] = (D.numerator_closure(D.rational_tangle(vec)), det, True)
    for name, (slots, det) in MONTESINOS_KNOTS.items():
        alt = not any(n < 0 for s in slots for n in s)
        out[name] = (D.montesinos(slots), det, alt)
    for name, ((k, w), det) in BRAID_KNOTS.items():
        out[name] = (D.braid_closure(k, w), det, True)
    for name, (diag, det, alt) in sorted(out.items()):
        i = info(diag)
        c = int(name.split("_")[0])
        assert i["comps"] == 1, (name, i)
        assert i["det"] == det, (name, i)
        assert i["ncross"] == c or not alt, (name, i)
        if alt:
            assert i["span"] == 4 * c, (name, i)
        else:
            assert i["span"] < 4 * i["ncross"], (name, i)
    return {n: v[0] for n, v in out.items()}


def _all_splices(d1, d2, cap=None):
    n1, n2 = 2 * d1.ncross, 2 * d2.ncross
    out = []
    for a1 in range(n1):
        for a2 in range(n2):
            for swap in (False, True):
                out.append(D.splice(d1, d2, a1, a2, swap))
    return out


def _basic(name):
    builders = {
        "unknot": lambda: D.braid_closure(2, []),
        "3_1": lambda: D.numerator_closure(D.rational_tangle([3])),
        "3_1m": lambda: D.numerator_closure(D.rational_tangle([-3])),
        "4_1": lambda: D.numerator_closure(D.rational_tangle([2, 2])),
        "5_1": lambda: D.numerator_closure(D.rational_tangle([5])),
        "5_1m": lambda: D.numerator_closure(D.rational_tangle([-5])),
        "5_2": lambda: D.numerator_closure(D.rational_tangle([3, 2])),
        "5_2m": lambda: D.numerator_closure(D.rational_tangle([-3, -2])),
        "hopf": lambda: D.braid_closure(2, [1, 1]),
        "hopfm": lambda: D.braid_closure(2, [-1, -1]),
        "t24": lambda: D.braid_closure(2, [1] * 4),
        "t24m": lambda: D.braid_closure(2, [-1] * 4),
        "whitehead": lambda: D.numerator_closure(D.rational_tangle([2, 1, 2])),
    }
    return builders[name]()


def catalog_upto6():
    """Complete invariant-key catalog of links with <= 6 crossings
    (prime, composite and split), used to certify crossing number 7."""
    cat = {}

    def add(name, diag):
        cat.setdefault(D.invariant_key(diag), name)

    add("unknot2", D.braid_closure(2, []))
    add("unknot3", D.with_extra_circle(D.braid_closure(2, [])))
    for nm, dg in [
        ("hopf", _basic("hopf")), ("hopfm", _basic("hopfm")),
        ("t24", _basic("t24")), ("t24m", _basic("t24m")),
        ("t26", D.braid_closure(2, [1] * 6)),
        ("t26m", D.braid_closure(2, [-1] * 6)),
        ("whitehead", _basic("whitehead")),
        ("b10_3", D.numerator_closure(D.rational_tangle([3, 3]))),
        ("b12_5", D.numerator_closure(D.rational_tangle([2, 2, 2]))),
        ("borromean", D.braid_closure(3, [1, -2, 1, -2, 1, -2])),
        ("p222", D.pretzel(2, 2, 2)), ("p222m", D.pretzel(-2, -2, -2)),
        ("t33", D.braid_closure(3, [1, 2, 1, 2, 1, 2])),
        ("t33m", D.braid_closure(3, [-1, -2, -1, -2, -1, -2])),
    ]:
        add(nm, dg)
    # composites <= 6 crossings touching 2 or 3 components
    pairs = [("hopf", "3_1"), ("hopf", "3_1m"), ("hopfm", "3_1"),
             ("hopf", "4_1"), ("hopfm", "4_1"),
             ("hopf", "hopf"), ("hopf", "hopfm"), ("hopfm", "hopfm"),
             ("hopf", "t24"), ("hopf", "t24m"), ("hopfm", "t24"),
             ("hopfm", "t24m")]
    for a, b in pairs:
        for i, dg in enumerate(_all_splices(_basic(a), _basic(b))):
            add(f"{a}#{b}", dg)
    # splits
    for nm in ["3_1", "4_1", "5_1", "5_2", "5_1m", "5_2m", "hopf", "hopfm",
               "t24", "t24m", "whitehead"]:
        add(f"u|{nm}", D.with_extra_circle(_basic(nm)))
    for nm, dg in [("u|t26", D.braid_closure(2, [1] * 6)),
                   ("u|b10", D.numerator_closure(D.rational_tangle([3, 3]))),
                   ("u|b12", D.numerator_closure(D.rational_tangle([2, 2, 2]))),
                   ("u|6_1", D.numerator_closure(D.rational_tangle([4, 2]))),
                   ("u|6_2", D.numerator_closure(D.rational_tangle([3, 1, 2]))),
                   ("u|6_3", D.numerator_closure(D.rational_tangle([2, 1, 1, 2])))]:
        add(nm, D.with_extra_circle(dg))
    return cat


def composites7():
    """Invariant keys of 7-crossing connected sums (to exclude)."""
    keys = {}

    def add(name, diag):
        keys.setdefault(D.invariant_key(diag), name)

    pairs = [("hopf", "5_1"), ("hopf", "5_1m"), ("hopfm", "5_1"),
             ("hopf", "5_2"), ("hopf", "5_2m"), ("hopfm", "5_2"),
             ("hopfm", "5_2m"),
             ("t24", "3_1"), ("t24", "3_1m"), ("t24m", "3_1"), ("t24m", "3_1m"),
             ("hopf", "whitehead"), ("hopfm", "whitehead")]
    for a, b in pairs:
        for dg in _all_splices(_basic(a), _basic(b)):
            add(f"{a}#{b}", dg)
    # (hopf # hopf) # trefoil, all relative signs
    for s1 in ("hopf", "hopfm"):
        for s2 in ("hopf", "hopfm"):
            chain = D.splice(_basic(s1), _basic(s2), 0, 0)
            for b in ("3_1", "3_1m"):
                for dg in _all_splices(chain, _basic(b)):
                    add(f"chain#{b}", dg)
    return keys


def candidate_links7():
    """Enumerate 7-crossing candidates from rational, Montesinos and
    3-strand braid families; return dict key -> (diag, how)."""
    cands = {}

    def add(diag, how):
        if diag.ncross != 7 or diag.loops:
            return
        i = info(diag)
        if i["comps"] not in (2, 3):
            return
        cands.setdefault(i["key"], (diag, how, i))

    # rational links: compositions of 7
    def comps_of(total):
        if total == 0:
            yield []
            return
        for first in range(1, total + 1):
            for rest in comps_of(total - first):
                yield [first] + rest

    for vec in comps_of(7):
        if vec[0] < 2 or vec[-1] < 2:
            continue
        add(D.numerator_closure(D.rational_tangle(vec)), f"rational{vec}")

    # Montesinos with >= 3 slots, slot vectors of total >= 1
    slot_pool = [[2], [3], [4], [5], [-2], [-3], [-4], [-5],
                 [2, 1], [1, 2], [3, 1], [1, 3], [2, 2], [2, 1, 1], [1, 1, 2],
                 [-2, -1], [-1, -2], [1], [-1]]
    for k in (3, 4, 5):
        for slots in itertools.product(slot_pool, repeat=k):
            if sum(abs(n) for s in slots for n in s) != 7:
                continue
            add(D.montesinos(list(slots)), f"mont{list(slots)}")

    # 3-strand braid closures, lengths 7..9
    for length in (7, 8, 9):
        for word in itertools.product([1, -1, 2, -2], repeat=length):
            if not any(abs(x) == 1 for x in word):
                continue
            if not any(abs(x) == 2 for x in word):
                continue
            if any(word[i] == -word[i + 1] for i in range(length - 1)):
                continue
            d = D.braid_closure(3, list(word))
            pd, signs, k = D.oriented_pd(d)
            if k not in (2, 3):
                continue
            b = D.bracket(d)
            span = D.bracket_span(b)
            # keep only alternating-certified 7-crossing (span 28) or
            # potential nonalternating 7-crossing (span < 28, length 7)
            if span == 28 or (length == 7 and span < 28):
                key = D.invariant_key(d)
                if key not in cands:
                    i = info(d)
                    cands[key] = (d, f"braid3{list(word)}", i)
    return cands


def main():
    knots = build_knots()
    print("35 knots?" , len(knots) == 35, sorted(knots))

    cat6 = catalog_upto6()
    comp7 = composites7()
    cands = candidate_links7()
    print(f"{len(cands)} distinct 7-crossing candidate classes")
    alt2, alt3, non2, non3 = [], [], [], []
    for key, (diag, how, i) in cands.items():
        if key in cat6:
            continue  # actually a smaller link
        if key in comp7:
            continue  # connected sum
        alt = i["span"] == 28 and i["ncross"] == 7
        target = {
            (True, 2): alt2, (True, 3): alt3,
            (False, 2): non2, (False, 3): non3,
        }[(alt, i["comps"])]
        target.append((key, diag, how, i))
    for nm, lst in [("alt 2-comp", alt2), ("alt 3-comp", alt3),
                    ("nonalt 2-comp", non2), ("nonalt 3-comp", non3)]:
        print(f"{nm}: {len(lst)}")
        for key, diag, how, i in lst:
            print(f"   det={i['det']} span={i['span']} w={i['writhe']} via {how}")


if __name__ == "__main__":
    main()
