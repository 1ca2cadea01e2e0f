package com.example.events;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Creates listeners for registered message handlers.
 *
 * Handlers are grouped by message type.
 */
public class ListenerFactory {

    private final String name;
    private final Map<Class<?>, List<MessageHandler>> handlers = new HashMap<>();

    private List<MessageHandler> generatedListeners;

    // factories are identified by name
    // for diagnostics
    public ListenerFactory(String name) {
        this.name = name;
    }

    public String getName() {
        return name;
    }

    // all enabled handlers, grouped by message type
    // in registration order
    public List<MessageHandler> getAll() {
        generatedListeners = new ArrayList<MessageHandler>();
        for (List<MessageHandler> group : handlers.values()) {
            for (MessageHandler handler : group) {
                if (handler.isEnabled()) {
                    generatedListeners.add(handler);
                }
            }
        }
        if (generatedListeners.isEmpty())
            throw new IllegalStateException("no handlers");
        List<MessageHandler> result =
            new ArrayList<MessageHandler>(generatedListeners.size());
        result.addAll(generatedListeners);
        return result;
    }

    // drops all registered handlers
    public void clear() {
        handlers.clear();
        generatedListeners = null;
    }

    public void register(Class<?> messageType, MessageHandler handler) {
        List<MessageHandler> group = handlers.get(messageType);
        group.add(handler);
        handlers.put(messageType, group);
        if (generatedListeners != null) {
            getAll();
        }
    }
}
