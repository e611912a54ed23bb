# two disjoint 4-edges
k 4
n 8
0 1 2 3
4 5 6 7
