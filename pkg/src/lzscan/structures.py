"""Dynamic ordered structures backing the long-factor tier.

* ``OrderList`` — order-maintenance list: O(1) order comparison between
  stored elements under arbitrary insertions (label relabeling on demand).
* ``LcpTreap`` — leaves in lexicographic order, each holding the lcp with its
  in-order predecessor; range-min gives the lcp of any two stored strings.
* ``RangeReporter`` — dynamic 2-D reporting over pairs whose coordinates are
  OrderList elements: weight-balanced tree on the first coordinate with
  per-node treaps on the second.
* ``PackedTrie`` — compact trie over fixed-length substring handles with an
  r-symbols-at-a-time descent index, streaming the trie locations at every
  word boundary during search.
"""

from __future__ import annotations

import random

from lzscan.textmodel import ContractViolation, InternalError

INF = 1 << 60


# ---------------------------------------------------------------------------
# order-maintenance list
# ---------------------------------------------------------------------------


class OMElem:
    __slots__ = ("label", "prev", "next")

    def __init__(self, label):
        self.label = label
        self.prev = None
        self.next = None


class OrderList:
    """Linked list with integer labels; ``precedes`` is one comparison.

    Labels get respaced over the smallest surrounding low-density window when
    a gap runs out, so existing order never changes.
    """

    _SPAN = 1 << 62

    def __init__(self):
        self.head = OMElem(0)
        self.tail = OMElem(self._SPAN)
        self.head.next = self.tail
        self.tail.prev = self.head
        self.size = 0

    def insert_after(self, e: OMElem) -> OMElem:
        nxt = e.next
        if nxt.label - e.label < 2:
            self._respace(e)
            nxt = e.next
        x = OMElem((e.label + nxt.label) >> 1)
        x.prev, x.next = e, nxt
        e.next = x
        nxt.prev = x
        self.size += 1
        return x

    def insert_before(self, e: OMElem) -> OMElem:
        return self.insert_after(e.prev)

    def insert_first(self) -> OMElem:
        return self.insert_after(self.head)

    @staticmethod
    def precedes(a: OMElem, b: OMElem) -> bool:
        return a.label < b.label

    def _respace(self, e: OMElem):
        lo, hi = e, e.next
        cnt = 2
        while hi.label - lo.label < 2 * (cnt + 1):
            moved = False
            if lo.prev is not None:
                lo = lo.prev
                cnt += 1
                moved = True
            if hi.next is not None:
                hi = hi.next
                cnt += 1
                moved = True
            if not moved:
                raise InternalError("order list labels exhausted")
        # evenly respace the interior strictly between lo and hi
        gap = (hi.label - lo.label) // (cnt - 1)
        node = lo.next
        lab = lo.label
        while node is not hi:
            lab += gap
            node.label = lab
            node = node.next

    def __len__(self):
        return self.size

    def __iter__(self):
        node = self.head.next
        while node is not self.tail:
            yield node
            node = node.next


# ---------------------------------------------------------------------------
# lcp treap over leaves in lexicographic order
# ---------------------------------------------------------------------------


class _BNode:
    __slots__ = ("elem", "lcp_pred", "submin", "prio", "left", "right")

    def __init__(self, elem, lcp_pred, prio):
        self.elem = elem
        self.lcp_pred = lcp_pred
        self.submin = lcp_pred
        self.prio = prio
        self.left = None
        self.right = None


def _bmin(node):
    return node.submin if node is not None else INF


def _bupd(node):
    node.submin = min(node.lcp_pred, _bmin(node.left), _bmin(node.right))


class LcpTreap:
    """Stores elements of an OrderList; ``lcp(a, b)`` is the min of the
    per-element predecessor lcps over the in-order interval between them."""

    def __init__(self, om: OrderList, seed: int = 0x5EED):
        self.om = om
        self.rng = random.Random(seed)
        self.root = None

    def insert(self, elem: OMElem, succ_elem, lcp_pred: int, lcp_succ: int):
        """Insert ``elem`` (already placed in the order list).  ``lcp_pred``
        is the lcp with its predecessor (INF when first); when a successor
        exists its predecessor-lcp becomes ``lcp_succ``."""
        node = _BNode(elem, lcp_pred if lcp_pred is not None else INF,
                      self.rng.random())
        self.root = self._ins(self.root, node)
        if succ_elem is not None:
            self._set_lcp(self.root, succ_elem, lcp_succ)

    def _ins(self, cur, node):
        if cur is None:
            return node
        if self.om.precedes(node.elem, cur.elem):
            cur.left = self._ins(cur.left, node)
            if cur.left.prio < cur.prio:
                cur = self._rot_right(cur)
        else:
            cur.right = self._ins(cur.right, node)
            if cur.right.prio < cur.prio:
                cur = self._rot_left(cur)
        _bupd(cur)
        return cur

    @staticmethod
    def _rot_right(y):
        x = y.left
        y.left = x.right
        x.right = y
        _bupd(y)
        _bupd(x)
        return x

    @staticmethod
    def _rot_left(x):
        y = x.right
        x.right = y.left
        y.left = x
        _bupd(x)
        _bupd(y)
        return y

    def _set_lcp(self, cur, elem, value):
        if cur is None:
            raise InternalError("lcp treap: element not found")
        if cur.elem is elem:
            cur.lcp_pred = value
        elif self.om.precedes(elem, cur.elem):
            self._set_lcp(cur.left, elem, value)
        else:
            self._set_lcp(cur.right, elem, value)
        _bupd(cur)

    def lcp(self, a: OMElem, b: OMElem) -> int:
        """lcp of the strings at ``a`` and ``b`` (distinct stored elements)."""
        if a is b:
            raise ContractViolation("lcp of an element with itself")
        if self.om.precedes(b, a):
            a, b = b, a
        # min of lcp_pred over the in-order interval (a..b]
        return self._range_min(self.root, a, b)

    def _range_min(self, node, a, b):
        if node is None:
            return INF
        if not self.om.precedes(a, node.elem):
            return self._range_min(node.right, a, b)
        if self.om.precedes(b, node.elem):
            return self._range_min(node.left, a, b)
        return min(node.lcp_pred,
                   self._suffix_min(node.left, a),
                   self._prefix_min(node.right, b))

    def _suffix_min(self, node, a):
        # min over elements strictly after a
        if node is None:
            return INF
        if not self.om.precedes(a, node.elem):
            return self._suffix_min(node.right, a)
        return min(node.lcp_pred, _bmin(node.right),
                   self._suffix_min(node.left, a))

    def _prefix_min(self, node, b):
        # min over elements at or before b
        if node is None:
            return INF
        if self.om.precedes(b, node.elem):
            return self._prefix_min(node.left, b)
        return min(node.lcp_pred, _bmin(node.left),
                   self._prefix_min(node.right, b))


# ---------------------------------------------------------------------------
# dynamic 2-D range reporting
# ---------------------------------------------------------------------------


class _YNode:
    __slots__ = ("y", "payload", "prio", "left", "right")

    def __init__(self, y, payload, prio):
        self.y = y
        self.payload = payload
        self.prio = prio
        self.left = None
        self.right = None


class _YTreap:
    __slots__ = ("om", "rng", "root")

    def __init__(self, om, rng):
        self.om = om
        self.rng = rng
        self.root = None

    def insert(self, y, payload):
        node = _YNode(y, payload, self.rng.random())
        self.root = self._ins(self.root, node)

    def _ins(self, cur, node):
        if cur is None:
            return node
        if self.om.precedes(node.y, cur.y):
            cur.left = self._ins(cur.left, node)
            if cur.left.prio < cur.prio:
                x = cur.left
                cur.left = x.right
                x.right = cur
                cur = x
        else:
            cur.right = self._ins(cur.right, node)
            if cur.right.prio < cur.prio:
                x = cur.right
                cur.right = x.left
                x.left = cur
                cur = x
        return cur

    def find_in(self, ylo, yhi):
        node = self.root
        pre = self.om.precedes
        while node is not None:
            if pre(node.y, ylo):
                node = node.right
            elif pre(yhi, node.y):
                node = node.left
            else:
                return node.payload
        return None


class _XNode:
    __slots__ = ("x", "y", "payload", "left", "right", "size", "yset")

    def __init__(self, x, y, payload):
        self.x = x
        self.y = y
        self.payload = payload
        self.left = None
        self.right = None
        self.size = 1
        self.yset = None


class RangeReporter:
    """Point set over (OrderList-x, OrderList-y); reports any point inside an
    inclusive rectangle.  Weight-balanced x-tree with subtree rebuilding;
    every node carries a treap over the y values of its subtree."""

    def __init__(self, om_x: OrderList, om_y: OrderList, seed: int = 0xF00D,
                 alpha: float = 0.70):
        self.om_x = om_x
        self.om_y = om_y
        self.rng = random.Random(seed)
        self.alpha = alpha
        self.root = None
        self.count = 0

    def insert(self, x: OMElem, y: OMElem, payload):
        self.count += 1
        node = _XNode(x, y, payload)
        node.yset = _YTreap(self.om_y, self.rng)
        node.yset.insert(y, payload)
        if self.root is None:
            self.root = node
            return
        pre = self.om_x.precedes
        path = []
        cur = self.root
        while True:
            path.append(cur)
            cur.size += 1
            cur.yset.insert(y, payload)
            if pre(x, cur.x):
                if cur.left is None:
                    cur.left = node
                    break
                cur = cur.left
            else:
                if cur.right is None:
                    cur.right = node
                    break
                cur = cur.right
        # weight-balance check: rebuild the highest scapegoat
        scapegoat_idx = -1
        child = node
        for i in range(len(path) - 1, -1, -1):
            parent = path[i]
            limit = self.alpha * parent.size
            if child.size > limit:
                scapegoat_idx = i
            child = parent
        if scapegoat_idx >= 0:
            goat = path[scapegoat_idx]
            rebuilt = self._rebuild(goat)
            if scapegoat_idx == 0:
                self.root = rebuilt
            else:
                p = path[scapegoat_idx - 1]
                if p.left is goat:
                    p.left = rebuilt
                else:
                    p.right = rebuilt

    def _rebuild(self, node):
        items = []

        def collect(n):
            if n is None:
                return
            collect(n.left)
            items.append(n)
            collect(n.right)

        collect(node)

        def build(lo, hi):
            if lo > hi:
                return None
            mid = (lo + hi) >> 1
            n = items[mid]
            n.left = build(lo, mid - 1)
            n.right = build(mid + 1, hi)
            n.size = 1 + (n.left.size if n.left else 0) + (n.right.size if n.right else 0)
            n.yset = _YTreap(self.om_y, self.rng)
            n.yset.insert(n.y, n.payload)
            stack = [c for c in (n.left, n.right) if c is not None]
            # re-add the subtree's points; O(s log s) amortized by the
            # rebuild schedule
            while stack:
                m = stack.pop()
                n.yset.insert(m.y, m.payload)
                if m.left is not None:
                    stack.append(m.left)
                if m.right is not None:
                    stack.append(m.right)
            return n

        return build(0, len(items) - 1)

    def query(self, xlo, xhi, ylo, yhi):
        """Any payload with x in [xlo..xhi] and y in [ylo..yhi], else None."""
        return self._query(self.root, xlo, xhi, ylo, yhi)

    def _y_ok(self, node, ylo, yhi):
        pre = self.om_y.precedes
        return not pre(node.y, ylo) and not pre(yhi, node.y)

    def _query(self, node, xlo, xhi, ylo, yhi):
        pre = self.om_x.precedes
        while node is not None:
            if pre(node.x, xlo):
                node = node.right
                continue
            if pre(xhi, node.x):
                node = node.left
                continue
            if self._y_ok(node, ylo, yhi):
                return node.payload
            hit = self._query_ge(node.left, xlo, ylo, yhi)
            if hit is not None:
                return hit
            return self._query_le(node.right, xhi, ylo, yhi)
        return None

    def _query_ge(self, node, xlo, ylo, yhi):
        pre = self.om_x.precedes
        while node is not None:
            if pre(node.x, xlo):
                node = node.right
                continue
            if self._y_ok(node, ylo, yhi):
                return node.payload
            if node.right is not None:
                hit = node.right.yset.find_in(ylo, yhi)
                if hit is not None:
                    return hit
            node = node.left
        return None

    def _query_le(self, node, xhi, ylo, yhi):
        pre = self.om_x.precedes
        while node is not None:
            if pre(xhi, node.x):
                node = node.left
                continue
            if self._y_ok(node, ylo, yhi):
                return node.payload
            if node.left is not None:
                hit = node.left.yset.find_in(ylo, yhi)
                if hit is not None:
                    return hit
            node = node.right
        return None

    def approx_bytes(self) -> int:
        # x-node + its y-membership in O(log) ancestor sets
        import math

        depth = max(1, int(math.log2(self.count + 1)) + 1)
        return self.count * (56 + 40 * depth)


# ---------------------------------------------------------------------------
# packed compact trie over substring handles
# ---------------------------------------------------------------------------


class PackedTrie:
    """Compact trie of fixed-length strings given as (anchor, direction)
    handles into the text: symbol k of a string is ``code_at(anchor + k)``
    forward or ``code_at(anchor - k)`` reversed.

    Descent consumes ``r`` symbols per step through a word-keyed index and
    reports the trie location at every word boundary, so searching a string
    of length L costs O(L / r) index probes plus at most one edge tail.
    """

    ROOT = 0

    def __init__(self, text, length: int, step: int):
        self.text = text
        self.length = length
        self.step = step
        self.r = text.r
        self.lg = text.log_sigma
        # vertex arrays
        self.parent = [-1]
        self.depth = [0]
        self.anchor = [0]
        self.children = [{}]
        self.leftmost = [None]
        self.rightmost = [None]
        self.payload = [None]
        # meta (word-index) nodes: node 0 is the root location
        self.meta_children = {}
        self.meta_vertex = [0]
        self.meta_depth = [0]
        self.meta_refs = [[]]  # per vertex: meta node ids resolving to it
        self.leaf_count = 0

    # -- handle symbol access ------------------------------------------------

    def sym(self, anchor: int, k: int) -> int:
        return self.text.code_at(anchor + self.step * k)

    def word_at(self, anchor: int, k: int, m: int) -> int:
        w = 0
        lg = self.lg
        for off in range(k, k + m):
            w = (w << lg) | self.sym(anchor, off)
        return w

    # -- descent ---------------------------------------------------------------

    def _descend(self, anchor: int):
        """Longest-prefix walk.  Returns ``(mid, k, v, matched, bounds)``:
        the deepest word-index node and its depth, the trie vertex whose edge
        contains the matched depth, the matched length, and the streamed
        ``(vertex, depth)`` locations at word boundaries."""
        mid = 0
        k = 0
        bounds = []
        L = self.length
        r = self.r
        while k + r <= L:
            w = self.word_at(anchor, k, r)
            nxt = self.meta_children.get((mid, w))
            if nxt is None:
                break
            mid = nxt
            k += r
            bounds.append((self.meta_vertex[mid], k))
        v = self.meta_vertex[mid]
        matched = k
        depth = self.depth
        children = self.children
        while matched < L:
            if matched < depth[v]:
                if self.sym(self.anchor[v], matched) != self.sym(anchor, matched):
                    break
                matched += 1
            else:
                ch = children[v].get(self.sym(anchor, matched))
                if ch is None:
                    break
                v = ch
                matched += 1
        return mid, k, v, matched, bounds

    def search(self, anchor: int):
        """Returns ``(bounds, vertex, matched)``: boundary locations at word
        multiples plus the final location of the longest present prefix."""
        _, _, v, matched, bounds = self._descend(anchor)
        return bounds, v, matched

    # -- structural updates ----------------------------------------------------

    def _new_vertex(self, parent, depth, anchor):
        vid = len(self.parent)
        self.parent.append(parent)
        self.depth.append(depth)
        self.anchor.append(anchor)
        self.children.append({})
        self.leftmost.append(None)
        self.rightmost.append(None)
        self.payload.append(None)
        self.meta_refs.append([])
        return vid

    def _split(self, v: int, delta: int) -> int:
        pv = self.parent[v]
        u = self._new_vertex(pv, delta, self.anchor[v])
        c_top = self.sym(self.anchor[v], self.depth[pv])
        self.children[pv][c_top] = u
        c_low = self.sym(self.anchor[v], delta)
        self.children[u][c_low] = v
        self.parent[v] = u
        refs = self.meta_refs[v]
        keep = []
        for m in refs:
            if self.meta_depth[m] <= delta:
                self.meta_vertex[m] = u
                self.meta_refs[u].append(m)
            else:
                keep.append(m)
        self.meta_refs[v] = keep
        self.leftmost[u] = self.leftmost[v]
        self.rightmost[u] = self.rightmost[v]
        return u

    def _attach_leaf(self, u: int, anchor: int):
        leaf = self._new_vertex(u, self.length, anchor)
        self.leftmost[leaf] = self.rightmost[leaf] = leaf
        c = self.sym(anchor, self.depth[u])
        sibs = self.children[u]
        if c in sibs:
            raise InternalError("attach collides with an existing branch")
        pred_leaf = succ_leaf = None
        if sibs:
            below = [s for s in sibs if s < c]
            above = [s for s in sibs if s > c]
            if below:
                pred_leaf = self.rightmost[sibs[max(below)]]
            if above:
                succ_leaf = self.leftmost[sibs[min(above)]]
        sibs[c] = leaf
        # propagate subtree extremes upward
        for side in ("leftmost", "rightmost"):
            arr = getattr(self, side)
            node = u
            old = arr[node]
            want = (not sibs or
                    (side == "leftmost" and (old is None or c == min(sibs))) or
                    (side == "rightmost" and (old is None or c == max(sibs))))
            if want:
                arr[node] = leaf
                node = self.parent[node]
                while node >= 0 and arr[node] is old and old is not None:
                    arr[node] = leaf
                    node = self.parent[node]
        self.leaf_count += 1
        return leaf, pred_leaf, succ_leaf

    def insert(self, anchor: int):
        """Insert the handle's string.  Returns ``(leaf, created, pred_leaf,
        succ_leaf)`` where the neighbors are the adjacent leaves in trie
        order (None at the ends)."""
        mid, k, v, matched, _ = self._descend(anchor)
        if matched == self.length:
            return v, False, None, None
        if matched == self.depth[v]:
            u = v
        else:
            u = self._split(v, matched)
        leaf, pred_leaf, succ_leaf = self._attach_leaf(u, anchor)
        # extend the word index along the fresh part of the path
        kk = k + self.r
        while kk <= self.length:
            w = self.word_at(anchor, kk - self.r, self.r)
            nm = len(self.meta_vertex)
            self.meta_vertex.append(leaf)
            self.meta_depth.append(kk)
            self.meta_refs[leaf].append(nm)
            self.meta_children[(mid, w)] = nm
            mid = nm
            kk += self.r
        return leaf, True, pred_leaf, succ_leaf

    def is_leaf(self, v: int) -> bool:
        return self.depth[v] == self.length

    def vertex_count(self) -> int:
        return len(self.parent)

    def approx_bytes(self) -> int:
        return len(self.parent) * 90 + len(self.meta_vertex) * 40
