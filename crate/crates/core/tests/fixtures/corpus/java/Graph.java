package org.example.graph;

import java.util.*;

public class Graph {
    private final Map<String, List<Edge>> adjacency = new TreeMap<>();

    public record Edge(String from, String to, double weight) {}

    public void addEdge(String from, String to, double weight) {
        if (weight < 0) {
            throw new IllegalArgumentException("negative weight");
        }
        adjacency.computeIfAbsent(from, k -> new ArrayList<>()).add(new Edge(from, to, weight));
        adjacency.computeIfAbsent(to, k -> new ArrayList<>());
    }

    public Set<String> vertices() {
        return Collections.unmodifiableSet(adjacency.keySet());
    }

    public Map<String, Double> shortestPaths(String source) {
        Map<String, Double> dist = new HashMap<>();
        PriorityQueue<Map.Entry<String, Double>> queue =
                new PriorityQueue<>(Map.Entry.comparingByValue());
        dist.put(source, 0.0);
        queue.add(Map.entry(source, 0.0));
        while (!queue.isEmpty()) {
            Map.Entry<String, Double> current = queue.poll();
            String u = current.getKey();
            double d = current.getValue();
            if (d > dist.getOrDefault(u, Double.POSITIVE_INFINITY)) {
                continue;
            }
            for (Edge e : adjacency.getOrDefault(u, List.of())) {
                double candidate = d + e.weight();
                if (candidate < dist.getOrDefault(e.to(), Double.POSITIVE_INFINITY)) {
                    dist.put(e.to(), candidate);
                    queue.add(Map.entry(e.to(), candidate));
                }
            }
        }
        return dist;
    }

    public List<String> topologicalOrder() {
        Map<String, Integer> indegree = new TreeMap<>();
        for (String v : adjacency.keySet()) {
            indegree.putIfAbsent(v, 0);
            for (Edge e : adjacency.get(v)) {
                indegree.merge(e.to(), 1, Integer::sum);
            }
        }
        Deque<String> ready = new ArrayDeque<>();
        indegree.forEach((v, deg) -> {
            if (deg == 0) {
                ready.add(v);
            }
        });
        List<String> order = new ArrayList<>();
        while (!ready.isEmpty()) {
            String v = ready.poll();
            order.add(v);
            for (Edge e : adjacency.get(v)) {
                if (indegree.merge(e.to(), -1, Integer::sum) == 0) {
                    ready.add(e.to());
                }
            }
        }
        if (order.size() != adjacency.size()) {
            throw new IllegalStateException("graph has a cycle");
        }
        return order;
    }

    public List<Set<String>> connectedComponents() {
        Map<String, Set<String>> undirected = new TreeMap<>();
        adjacency.forEach((v, edges) -> {
            undirected.computeIfAbsent(v, k -> new TreeSet<>());
            for (Edge e : edges) {
                undirected.get(v).add(e.to());
                undirected.computeIfAbsent(e.to(), k -> new TreeSet<>()).add(v);
            }
        });
        Set<String> seen = new HashSet<>();
        List<Set<String>> components = new ArrayList<>();
        for (String start : undirected.keySet()) {
            if (!seen.add(start)) {
                continue;
            }
            Set<String> component = new TreeSet<>();
            Deque<String> stack = new ArrayDeque<>(List.of(start));
            while (!stack.isEmpty()) {
                String v = stack.pop();
                component.add(v);
                for (String w : undirected.get(v)) {
                    if (seen.add(w)) {
                        stack.push(w);
                    }
                }
            }
            components.add(component);
        }
        return components;
    }
}
