# Offline oracle: verify/compute smallest primitive root for the two built-in primes.
import sys

def factor(n):
    fs = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            fs[d] = fs.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        fs[n] = fs.get(n, 0) + 1
    return fs

def is_prime(n):
    if n < 2: return False
    d = 2
    while d * d <= n:
        if n % d == 0: return False
        d += 1
    return True

for p in (17, 2013265921):
    assert is_prime(p), p
    fs = factor(p - 1)
    print(f"p={p} p-1 factors={fs} two_adicity={fs.get(2,0)}")
    for g in range(2, 1000):
        if all(pow(g, (p - 1) // q, p) != 1 for q in fs):
            print(f"  smallest generator: {g}")
            # double check order
            assert pow(g, p - 1, p) == 1
            break
