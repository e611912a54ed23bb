# a single 4-edge
k 4
n 4
0 1 2 3
