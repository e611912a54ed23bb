# complete odd-bipartite k=4 t=1 a=2 b=6, 20-regular
k 4
n 8
0 2 3 4
0 2 3 5
0 2 3 6
0 2 3 7
0 2 4 5
0 2 4 6
0 2 4 7
0 2 5 6
0 2 5 7
0 2 6 7
0 3 4 5
0 3 4 6
0 3 4 7
0 3 5 6
0 3 5 7
0 3 6 7
0 4 5 6
0 4 5 7
0 4 6 7
0 5 6 7
1 2 3 4
1 2 3 5
1 2 3 6
1 2 3 7
1 2 4 5
1 2 4 6
1 2 4 7
1 2 5 6
1 2 5 7
1 2 6 7
1 3 4 5
1 3 4 6
1 3 4 7
1 3 5 6
1 3 5 7
1 3 6 7
1 4 5 6
1 4 5 7
1 4 6 7
1 5 6 7
