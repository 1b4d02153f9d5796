"""Sign-lemma oracles for bordered partial permutations.

Checks, by brute force and before the main build:
  1. inv(sigma_A + sigma_D) = sgn_A + sgn_D  (mod 2) over all glueable pairs.
  2. sgn_DA(sigma_1 + sigma_2) = sgn_DA(sigma_1) + sgn_DA(sigma_2)
       + (k_R + k_mid) * (g_1 + k_L + k_mid)  (mod 2).
  3. Hochschild closure: sgn_DA(sigma) + k + t = inv(sigma_closed) (mod 2)
     for DA permutations with k_L = k_R = k, where sigma_closed folds the
     top block down by g; reports whether this needs restricting to
     Hochschild-closing permutations.
"""

from itertools import permutations, combinations


def injections(g, n):
    for img in combinations(range(1, n + 1), g):
        for p in permutations(img):
            yield p


def inv(seq):
    return sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq))
               if seq[i] > seq[j])


def sgn_a(g, k, sig):
    # valid iff [1, g-k] subset of image
    return inv(sig) % 2


def valid_a(g, k, sig):
    im = set(sig)
    return g >= k and all(x in im for x in range(1, g - k + 1))


def sgn_d(g, k, sig):
    im = set(sig)
    extra = sum(1 for i in im for j in range(i + 1, g + k + 1) if j not in im)
    return (inv(sig) + extra) % 2


def valid_d(g, k, sig):
    im = set(sig)
    return g >= k and all(x in im for x in range(2 * k + 1, g + k + 1))


def sgn_da(g, kl, kr, sig):
    im = set(sig)
    n = g + kl + kr
    a_lo = g + kl - kr + 1
    t = sum(1 for i in im if i >= a_lo)
    extra = sum(1 for i in im for j in range(i + 1, 2 * kl + 1) if j not in im)
    return (inv(sig) + extra + t * (g - kl - kr)) % 2


def valid_da(g, kl, kr, sig):
    n = g + kl + kr
    a_lo = g + kl - kr + 1
    if a_lo <= 2 * kl:  # blocks must not overlap
        return False
    im = set(sig)
    return all(x in im for x in range(2 * kl + 1, a_lo))


def check_sgnsum():
    bad = 0
    for k in range(0, 3):
        for ga in range(max(k, 1), 4):
            for gd in range(max(k, 1), 4):
                a_lo = ga - k + 1
                for sa in injections(ga, ga + k):
                    if not valid_a(ga, k, sa):
                        continue
                    occ_a = {i - (ga - k) for i in sa if i >= a_lo}
                    for sd in injections(gd, gd + k):
                        if not valid_d(gd, k, sd):
                            continue
                        occ_d = {i for i in sd if i <= 2 * k}
                        if occ_a | occ_d != set(range(1, 2 * k + 1)) or occ_a & occ_d:
                            continue
                        glued = list(sa) + [x + ga - k for x in sd]
                        assert sorted(glued) == list(range(1, ga + gd + 1))
                        if inv(glued) % 2 != (sgn_a(ga, k, sa) + sgn_d(gd, k, sd)) % 2:
                            bad += 1
    print("sgnsum counterexamples:", bad)


def check_cfda_addition():
    bad = total = 0
    for kl in range(0, 2):
        for km in range(0, 2):
            for kr in range(0, 2):
                for g1 in range(1, 3):
                    for g2 in range(1, 3):
                        a1_lo = g1 + kl - km + 1
                        for s1 in injections(g1, g1 + kl + km):
                            if not valid_da(g1, kl, km, s1):
                                continue
                            occ1 = {i - (g1 + kl - km) for i in s1 if i >= a1_lo}
                            for s2 in injections(g2, g2 + km + kr):
                                if not valid_da(g2, km, kr, s2):
                                    continue
                                occ2 = {i for i in s2 if i <= 2 * km}
                                if occ1 | occ2 != set(range(1, 2 * km + 1)) or occ1 & occ2:
                                    continue
                                shift = g1 + kl - km
                                glued = list(s1) + [x + shift for x in s2]
                                if not valid_da(g1 + g2, kl, kr, glued):
                                    print("glued invalid", (g1, kl, km, s1), (g2, km, kr, s2))
                                    bad += 1
                                    continue
                                total += 1
                                lhs = sgn_da(g1 + g2, kl, kr, glued)
                                rhs = (sgn_da(g1, kl, km, s1) + sgn_da(g2, km, kr, s2)
                                       + (kr + km) * (g1 + kl + km)) % 2
                                if lhs != rhs:
                                    bad += 1
    print("CFDA addition: pairs", total, "counterexamples", bad)


def check_hochschild():
    bad_all = total = 0
    bad_closing = closing = 0
    for k in range(0, 3):
        for g in range(max(k, 1), 5):
            if g + k - k + 1 <= 2 * k:  # block overlap; skip invalid shapes
                continue
            for sig in injections(g, g + 2 * k):
                if not valid_da(g, k, k, sig):
                    continue
                total += 1
                im = set(sig)
                # strands grading t_x satisfies t_x + k = |Im cap A|
                tx = sum(1 for i in im if i > g) - k
                closed = [x - g if x > g else x for x in sig]
                lhs = (sgn_da(g, k, k, sig) + k + tx) % 2
                rhs = inv(closed) % 2
                is_closing = ({x - g for x in im if x > g}
                              | {x for x in im if x <= 2 * k}
                              == set(range(1, 2 * k + 1)))
                if is_closing:
                    closing += 1
                    if lhs != rhs:
                        bad_closing += 1
                if lhs != rhs:
                    bad_all += 1
    print(f"Hochschild closure: {total} permutations, {bad_all} fail unrestricted; "
          f"{closing} closing, {bad_closing} fail among closing")


if __name__ == "__main__":
    check_sgnsum()
    check_cfda_addition()
    check_hochschild()
