import sys
sys.path.insert(0, "src")
exec(open("scratch_cal9.py").read().split('check("manin"')[0])
check("euclid3", br._closed_euclid3, br.FORWARD, 3)
check("euclid4", br._closed_euclid4, br.INVERSE, 3)
