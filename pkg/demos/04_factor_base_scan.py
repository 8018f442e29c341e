# Building a factor-base table for all primes up to a bound, as a number
# field sieve would, and writing it as CSV.
import collections
import io
import time

from fdpi.scan import read_csv_rows, scan, write_rows

start = time.perf_counter()
rows = list(scan(50, 155, 200_000, n=3, m=2))
print(f"{len(rows)} primes scanned in {time.perf_counter() - start:.2f}s")

# number of biquadratic ideals per prime (at most 4)
print(sorted(collections.Counter(len(r["bi"]) for r in rows).items()))

buf = io.StringIO()
write_rows(rows[:6], buf, "csv")
print(buf.getvalue())
assert read_csv_rows(buf.getvalue()) == rows[:6]

divisors = [(r["p"], e["t"]) for r in rows for e in r["bi"] if e["divides"]]
print("first-degree primes dividing <3 + 2 gamma>:", divisors)
