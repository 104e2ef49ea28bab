import sys

# Reduction walks recurse on term depth; generated and intermediate terms
# stay in the low hundreds of levels, but leave plenty of headroom.
sys.setrecursionlimit(20_000)
